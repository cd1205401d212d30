#include "hrw/io.hpp"

#include <sstream>
#include <vector>

#include "hrw/errors.hpp"

namespace hrw {

namespace {

struct Line {
  int no;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
    std::istringstream ls(raw);
    Line line{no, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_index(const std::string& tok, int line_no) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected a nonnegative integer, got '" + tok + "'");
  }
}

}  // namespace

ValidationResult parse_hemiring(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  std::size_t i = 0;
  auto need = [&](const std::string& what) -> const Line& {
    if (i >= lines.size()) {
      const int last = lines.empty() ? 1 : lines.back().no;
      throw ParseError(last, "unexpected end of file, expected " + what);
    }
    return lines[i];
  };

  {
    const Line& l = need("'hemiring' header");
    if (l.tokens != std::vector<std::string>{"hemiring"})
      throw ParseError(l.no, "expected 'hemiring' header");
    ++i;
  }
  int order = 0;
  {
    const Line& l = need("'order n'");
    if (l.tokens.size() != 2 || l.tokens[0] != "order")
      throw ParseError(l.no, "expected 'order n'");
    order = parse_index(l.tokens[1], l.no);
    if (order < 1) throw ParseError(l.no, "order must be positive");
    ++i;
  }

  auto read_table = [&](const std::string& name) {
    const Line& hdr = need("'" + name + "' section");
    if (hdr.tokens != std::vector<std::string>{name})
      throw ParseError(hdr.no, "expected '" + name + "' section");
    ++i;
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < order; ++r) {
      const Line& l = need("row " + std::to_string(r) + " of '" + name + "'");
      if (l.tokens.size() != static_cast<std::size_t>(order))
        throw ParseError(l.no, name + " row has " + std::to_string(l.tokens.size()) +
                                   " entries, expected " + std::to_string(order));
      std::vector<int> row;
      for (const std::string& t : l.tokens) {
        const int v = parse_index(t, l.no);
        if (v >= order)
          throw ParseError(l.no, "entry " + std::to_string(v) + " out of range [0," +
                                     std::to_string(order - 1) + "]");
        row.push_back(v);
      }
      rows.push_back(std::move(row));
      ++i;
    }
    return rows;
  };

  const auto add = read_table("add");
  const auto mul = read_table("mul");
  if (i != lines.size()) throw ParseError(lines[i].no, "unexpected trailing content");
  return validate_hemiring(add, mul);
}

std::string serialize_hemiring(const Hemiring& h) {
  std::ostringstream out;
  out << "hemiring\norder " << h.order << "\nadd\n";
  for (int x = 0; x < h.order; ++x) {
    for (int y = 0; y < h.order; ++y) out << (y ? " " : "") << h.add(x, y);
    out << "\n";
  }
  out << "mul\n";
  for (int x = 0; x < h.order; ++x) {
    for (int y = 0; y < h.order; ++y) out << (y ? " " : "") << h.mul(x, y);
    out << "\n";
  }
  return out.str();
}

Ifs parse_ifs(const std::string& text, const Carrier& carrier) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty IFS file");
  const Line& hdr = lines[0];
  if (hdr.tokens.empty() || hdr.tokens[0] != "over")
    throw ParseError(hdr.no, "expected 'over n' or 'over N window W' header");
  if (hdr.tokens.size() == 2) {
    const int n = parse_index(hdr.tokens[1], hdr.no);
    if (carrier.windowed() || carrier.size() != n)
      throw InputError("IFS file is over order " + std::to_string(n) +
                       " but the carrier is " + carrier.describe());
  } else if (hdr.tokens.size() == 4 && hdr.tokens[1] == "N" && hdr.tokens[2] == "window") {
    const int w = parse_index(hdr.tokens[3], hdr.no);
    if (!carrier.windowed() || carrier.window() != w)
      throw InputError("IFS file is over N window " + std::to_string(w) +
                       " but the carrier is " + carrier.describe());
  } else {
    throw ParseError(hdr.no, "expected 'over n' or 'over N window W' header");
  }

  const int n = carrier.size();
  std::vector<Degree> mu(n), lam(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3)
      throw ParseError(l.no, "expected 'index mu lambda', got " +
                                 std::to_string(l.tokens.size()) + " tokens");
    const int x = parse_index(l.tokens[0], l.no);
    if (x >= n) throw ParseError(l.no, "element " + std::to_string(x) + " out of range");
    if (seen[x]) throw ParseError(l.no, "duplicate element " + std::to_string(x));
    seen[x] = true;
    Degree m, lm;
    try {
      m = Rat::parse(l.tokens[1]);
      lm = Rat::parse(l.tokens[2]);
    } catch (const InputError& e) {
      throw ParseError(l.no, e.what());
    }
    if (!is_degree(m) || !is_degree(lm))
      throw ParseError(l.no, "degree out of range at element " + std::to_string(x));
    if (m + lm > Rat(1))
      throw ParseError(l.no, "sum " + (m + lm).str() + " > 1 at element " + std::to_string(x));
    mu[x] = m;
    lam[x] = lm;
  }
  for (int x = 0; x < n; ++x)
    if (!seen[x])
      throw ParseError(lines.back().no, "missing element " + std::to_string(x));
  return Ifs(FuzzySet(carrier, std::move(mu)), FuzzySet(carrier, std::move(lam)));
}

std::string serialize_ifs(const Ifs& a) {
  std::ostringstream out;
  if (a.carrier().windowed())
    out << "over N window " << a.carrier().window() << "\n";
  else
    out << "over " << a.carrier().size() << "\n";
  for (int x = 0; x < a.size(); ++x)
    out << x << " " << a.mu().at(x).str() << " " << a.lambda().at(x).str() << "\n";
  return out.str();
}

MorphismMap parse_morphism(const std::string& text, const CarrierResolver& resolve) {
  const std::vector<Line> lines = tokenize(text);
  std::size_t i = 0;
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"morphism"})
    throw ParseError(lines.empty() ? 1 : lines[0].no, "expected 'morphism' header");
  ++i;
  std::optional<Carrier> dom, cod;
  std::vector<int> map;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] == "dom" && l.tokens.size() == 2) {
      dom = resolve(l.tokens[1]);
    } else if (l.tokens[0] == "cod" && l.tokens.size() == 2) {
      cod = resolve(l.tokens[1]);
    } else if (l.tokens[0] == "map") {
      for (std::size_t t = 1; t < l.tokens.size(); ++t)
        map.push_back(parse_index(l.tokens[t], l.no));
    } else {
      throw ParseError(l.no, "expected 'dom NAME', 'cod NAME' or 'map i j ...'");
    }
  }
  if (!dom || !cod) throw ParseError(lines.back().no, "morphism needs dom and cod");
  if (dom->windowed() || cod->windowed())
    throw InputError("morphisms are defined between finite hemirings");
  return MorphismMap(dom->ring(), cod->ring(), std::move(map));
}

ElementSubset parse_subset(const std::string& text, int universe) {
  ElementSubset s(universe);
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) {
        const int v = parse_index(cur, 1);
        if (v >= universe) throw InputError("subset element " + cur + " out of range");
        s.add(v);
      }
      cur.clear();
    } else if (ch != '{' && ch != '}' && ch != ' ') {
      cur += ch;
    }
  }
  return s;
}

}  // namespace hrw
