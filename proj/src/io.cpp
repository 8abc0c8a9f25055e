#include "rescat/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rescat/errors.hpp"

namespace rescat {

namespace {

struct Line {
  int number;
  std::string text;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  int n = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++n;
    std::string_view raw = text.substr(pos, end - pos);
    if (std::size_t h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({n, t});
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
  throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

// Splits "key rest" at the first whitespace.
std::pair<std::string, std::string> keyword(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return {s.substr(0, i), trim(std::string_view(s).substr(i))};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

int parse_int(const std::string& w, const std::string& source, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(w, &used);
    if (used != w.size()) throw std::invalid_argument(w);
    return v;
  } catch (const std::exception&) {
    fail(source, line, "expected an integer, got '" + w + "'");
  }
}

Poly poly_at(const std::string& text, const PolyRing& P, const std::string& source, int line) {
  try {
    return parse_poly(text, P);
  } catch (const InputError& e) {
    fail(source, line, std::string("cannot parse '") + text + "': " + e.what());
  }
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::vector<Poly> ideal_list(const std::string& inner, const GradedRingPtr& R, const std::string& source, int line) {
  std::vector<Poly> gens;
  for (const std::string& g : split(inner, ';')) {
    if (g.empty()) fail(source, line, "empty generator");
    Poly f = poly_at(g, R->poly(), source, line);
    if (!f.empty() && !is_homogeneous(f)) fail(source, line, "generator '" + g + "' is not homogeneous");
    gens.push_back(f);
  }
  return gens;
}

ClosedSet closed_set_at(const std::string& text, const GradedRingPtr& R, const std::string& source, int line) {
  std::string t = trim(text);
  if (t == "∅") return ClosedSet::empty(R);
  if (t.size() < 3 || t.compare(0, 2, "V(") != 0 || t.back() != ')')
    fail(source, line, "expected V(...) or ∅, got '" + t + "'");
  return ClosedSet(R, ideal_list(t.substr(2, t.size() - 3), R, source, line));
}

Chain chain_from(const std::vector<Line>& ls, std::size_t from, const GradedRingPtr& R, const std::string& source) {
  Chain c;
  for (std::size_t k = from; k < ls.size(); ++k) {
    const Line& l = ls[k];
    auto [key, rest] = keyword(l.text);
    if (key != "level") fail(source, l.number, "expected 'level <i>: V(...)'");
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos) fail(source, l.number, "missing ':' after the level index");
    int i = parse_int(trim(std::string_view(rest).substr(0, colon)), source, l.number);
    if (i != static_cast<int>(c.levels.size()) + 1)
      fail(source, l.number, "levels must be numbered 1, 2, ... in order");
    c.levels.push_back(closed_set_at(rest.substr(colon + 1), R, source, l.number));
  }
  c.trim();
  return c;
}

}  // namespace

GradedRingPtr parse_ring(std::string_view text, const std::string& source) {
  uint32_t p = 101;
  std::vector<std::string> names;
  std::vector<int> weights;
  std::string rels;
  int rels_line = 0, vars_line = 0;
  for (const Line& l : lines_of(text)) {
    auto [key, rest] = keyword(l.text);
    if (key == "char") {
      int v = parse_int(rest, source, l.number);
      if (v < 2 || v >= 65536 || !is_prime(static_cast<uint32_t>(v)))
        fail(source, l.number, "characteristic must be a prime below 65536");
      p = static_cast<uint32_t>(v);
    } else if (key == "vars") {
      vars_line = l.number;
      for (const std::string& w : words(rest)) {
        std::size_t colon = w.find(':');
        std::string name = w.substr(0, colon);
        int deg = colon == std::string::npos ? 1 : parse_int(w.substr(colon + 1), source, l.number);
        if (!valid_name(name)) fail(source, l.number, "bad variable name '" + name + "'");
        if (deg <= 0) fail(source, l.number, "variable degrees must be positive");
        for (const std::string& n : names)
          if (n == name) fail(source, l.number, "variable '" + name + "' declared twice");
        names.push_back(name);
        weights.push_back(deg);
      }
    } else if (key == "rels") {
      rels = rest;
      rels_line = l.number;
    } else {
      fail(source, l.number, "unknown keyword '" + key + "'");
    }
  }
  if (names.empty()) fail(source, vars_line ? vars_line : 1, "no variables declared");
  if (names.size() > static_cast<std::size_t>(kMaxVars)) fail(source, vars_line, "at most 16 variables are supported");
  auto P = std::make_shared<PolyRing>(p, names, weights);
  std::vector<Poly> gens;
  if (!trim(rels).empty()) {
    for (const std::string& g : split(rels, ';')) {
      if (g.empty()) fail(source, rels_line, "empty relation");
      Poly f = poly_at(g, *P, source, rels_line);
      if (f.empty()) continue;
      if (!is_homogeneous(f)) fail(source, rels_line, "relation '" + g + "' is not homogeneous");
      if (poly_degree(f) == 0) fail(source, rels_line, "relation '" + g + "' is a unit");
      gens.push_back(f);
    }
  }
  return GradedRing::make(P, gens);
}

Module parse_module(std::string_view text, const GradedRingPtr& R, const std::string& source) {
  std::vector<Line> ls = lines_of(text);
  if (ls.empty()) fail(source, 1, "empty module file");
  auto [key, rest] = keyword(ls[0].text);
  if (key != "gens") fail(source, ls[0].number, "module file must start with 'gens'");
  FreeModule F0;
  for (const std::string& w : words(rest)) F0.deg.push_back(parse_int(w, source, ls[0].number));

  const PolyRing& P = R->poly();
  std::vector<std::vector<Poly>> cols;
  FreeModule F1;
  for (std::size_t k = 1; k < ls.size(); ++k) {
    const Line& l = ls[k];
    auto [kw, body] = keyword(l.text);
    if (kw != "rel") fail(source, l.number, "expected 'rel'");
    std::vector<std::string> entries;
    if (F0.rank() == 1)
      entries = {body};
    else if (body.find(';') != std::string::npos)
      entries = split(body, ';');
    else
      entries = words(body);
    if (entries.size() != F0.rank())
      fail(source, l.number, "relation has " + std::to_string(entries.size()) + " entries for " +
                                 std::to_string(F0.rank()) + " generators");
    std::vector<Poly> col;
    std::optional<int> deg;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      Poly f = R->reduce(poly_at(entries[i], P, source, l.number));
      if (!f.empty()) {
        if (!is_homogeneous(f)) fail(source, l.number, "entry '" + entries[i] + "' is not homogeneous");
        int d = poly_degree(f) + F0.deg[i];
        if (deg && *deg != d)
          fail(source, l.number, "entry '" + entries[i] + "' has degree incompatible with the other entries");
        deg = d;
      }
      col.push_back(f);
    }
    if (!deg) continue;
    F1.deg.push_back(*deg);
    cols.push_back(col);
  }
  Matrix A(F0, F1);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < F0.rank(); ++i) A.at(i, j) = cols[j][i];
  return Module(R, A);
}

ClosedSet parse_closed_set(std::string_view text, const GradedRingPtr& R) {
  return closed_set_at(std::string(text), R, "<closed set>", 1);
}

Chain parse_chain(std::string_view text, const GradedRingPtr& R, const std::string& source) {
  return chain_from(lines_of(text), 0, R, source);
}

Descriptor parse_descriptor(std::string_view text, const GradedRingPtr& R, const std::string& source,
                            const std::string& base_dir) {
  std::vector<Line> ls = lines_of(text);
  if (ls.empty()) fail(source, 1, "empty descriptor");
  const std::string& head = ls[0].text;
  Descriptor D;
  auto require_valid = [&](const Chain& c) {
    GcfReport r = gcf_validate(c);
    if (!r.valid) fail(source, ls[0].number, "chain is not grade consistent: " + r.reason);
  };
  if (head.rfind("fin-pd:", 0) == 0 || head.rfind("dominant:", 0) == 0) {
    D.kind = head[0] == 'f' ? Descriptor::FinPD : Descriptor::Dominant;
    std::vector<Line> body(ls.begin() + 1, ls.end());
    std::string rest = trim(head.substr(head.find(':') + 1));
    if (!rest.empty()) body.insert(body.begin(), Line{ls[0].number, rest});
    D.f = chain_from(body, 0, R, source);
    require_valid(D.f);
    if (D.kind == Descriptor::Dominant && !R->is_gorenstein())
      fail(source, 1, "dominant descriptor needs a Gorenstein ring");
  } else if (head.rfind("hyper:", 0) == 0) {
    D.kind = Descriptor::Hyper;
    std::string rest = trim(head.substr(6));
    if (rest.rfind("W=", 0) != 0) fail(source, ls[0].number, "expected 'hyper: W=V(...)'");
    if (!R->is_hypersurface()) fail(source, ls[0].number, "hyper descriptor needs a hypersurface ring");
    D.W = closed_set_at(rest.substr(2), R, source, ls[0].number);
    if (!closed_contains(singular_locus(R), *D.W)) fail(source, ls[0].number, "W is not inside the singular locus");
    D.f = chain_from(ls, 1, R, source);
    require_valid(D.f);
  } else if (head.rfind("generated:", 0) == 0) {
    D.kind = Descriptor::Generated;
    std::vector<std::string> paths;
    std::string first = trim(head.substr(10));
    if (!first.empty()) paths.push_back(first);
    for (std::size_t k = 1; k < ls.size(); ++k) paths.push_back(ls[k].text);
    for (const std::string& p : paths) {
      std::filesystem::path path(p);
      if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
      D.gens.push_back(load_module(path.string(), R));
    }
    if (D.gens.empty()) fail(source, ls[0].number, "generated descriptor lists no modules");
  } else {
    fail(source, ls[0].number, "unknown descriptor kind; expected fin-pd:, dominant:, hyper: or generated:");
  }
  return D;
}

PrimeCatalog parse_catalog(std::string_view text, const GradedRingPtr& R, const std::string& source) {
  std::vector<std::vector<Poly>> primes;
  for (const Line& l : lines_of(text)) {
    auto [key, rest] = keyword(l.text);
    if (key != "prime") fail(source, l.number, "expected 'prime (...)'");
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') fail(source, l.number, "expected '(...)'");
    std::vector<Poly> gens = ideal_list(rest.substr(1, rest.size() - 2), R, source, l.number);
    if (R->ideal_with(gens).is_unit()) fail(source, l.number, "catalog entry is the unit ideal");
    primes.push_back(gens);
  }
  return PrimeCatalog(R, primes);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GradedRingPtr load_ring(const std::string& path) { return parse_ring(read_file(path), path); }

Module load_module(const std::string& path, const GradedRingPtr& R) { return parse_module(read_file(path), R, path); }

Chain load_chain(const std::string& path, const GradedRingPtr& R) { return parse_chain(read_file(path), R, path); }

Descriptor load_descriptor(const std::string& path, const GradedRingPtr& R) {
  std::string dir = std::filesystem::path(path).parent_path().string();
  return parse_descriptor(read_file(path), R, path, dir.empty() ? "." : dir);
}

PrimeCatalog load_catalog(const std::string& path, const GradedRingPtr& R) {
  return parse_catalog(read_file(path), R, path);
}

std::string format_ring(const GradedRing& R) {
  const PolyRing& P = R.poly();
  std::ostringstream os;
  os << "char " << P.p() << "\nvars";
  for (int i = 0; i < P.nvars(); ++i) os << ' ' << P.names()[i] << ':' << P.weights()[i];
  os << "\nrels";
  const auto& G = R.ideal().gb();
  for (std::size_t i = 0; i < G.size(); ++i) os << (i ? "; " : " ") << P.format(G[i]);
  os << '\n';
  return os.str();
}

std::string format_descriptor(const Descriptor& D) {
  switch (D.kind) {
    case Descriptor::FinPD: return "fin-pd:\n" + D.f.str();
    case Descriptor::Dominant: return "dominant:\n" + D.f.str();
    case Descriptor::Hyper: return "hyper: W=" + (D.W ? D.W->str() : std::string("∅")) + "\n" + D.f.str();
    case Descriptor::Generated: {
      std::string s = "generated:\n";
      for (const Module& m : D.gens) s += format_module(m);
      return s;
    }
  }
  return {};
}

}  // namespace rescat
