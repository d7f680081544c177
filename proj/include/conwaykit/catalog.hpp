#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "diagram.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "tangle.hpp"

namespace conwaykit {

struct SeedRecord {
  std::string name;
  unsigned crossings = 0;
  Natural conway_number = 0;
  unsigned families = 0;
  std::string diagram_file;
  std::string display;
  PDCode diagram;
};

// C = A1 B2 + A2 B1
struct Split2 {
  Polynomial a1, a2, b1, b2;
  friend bool operator==(const Split2&, const Split2&) = default;
};

struct Split3Side {
  std::optional<std::uint32_t> distinguished;
  std::array<std::uint32_t, 3> owners{};
  Vec5 vector;
  friend bool operator==(const Split3Side&, const Split3Side&) = default;
  Tangle3 tangle() const { return make_tangle3(vector, owners, distinguished); }
};

struct Split3 {
  Split3Side u, v;
  friend bool operator==(const Split3&, const Split3&) = default;
};

using Split = std::variant<std::monostate, Split2, Split3>;

struct FamilyRecord {
  std::string id;
  std::string seed;
  unsigned n = 0;
  std::vector<Color> hand;       // color of a_j
  std::vector<unsigned> cross;   // seed crossing carrying a_j
  Polynomial cfunction;
  std::string caption;
  std::optional<unsigned> terms;
  Split split;
  std::string figure;
  std::string erratum;           // empty when the caption is printed correctly

  std::string hand_string() const {
    std::string s;
    for (auto c : hand) s += color_letter(c);
    return s;
  }
  friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

// ---------- split text form ----------

namespace detail {

inline std::vector<std::string> split_on_char(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    if constexpr (std::is_same_v<T, std::string>)
      out += v[i];
    else
      out += std::to_string(v[i]);
  }
  return out;
}

inline unsigned parse_uint(const std::string& s, const char* what) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), is_digit))
    throw InvalidEntry(std::string("bad ") + what + " '" + s + "'");
  return static_cast<unsigned>(std::stoul(s));
}

inline Split3Side parse_split3_side(const std::string& s) {
  auto eq = s.find('=');
  auto lb = s.find('[');
  auto rb = s.find(']');
  if (eq == std::string::npos || lb == std::string::npos || rb == std::string::npos || !(lb < rb && rb < eq))
    throw InvalidEntry("3-tangle side must look like S[i,j,k]=... or N<j>[i,j,k]=...");
  Split3Side side;
  std::string tag = s.substr(0, lb);
  if (tag == "S") {
  } else if (tag.size() > 1 && tag[0] == 'N') {
    side.distinguished = parse_uint(tag.substr(1), "distinguished variable");
  } else {
    throw InvalidEntry("unknown 3-tangle kind '" + tag + "'");
  }
  auto own = split_on_char(s.substr(lb + 1, rb - lb - 1), ',');
  if (own.size() != 3) throw InvalidEntry("3-tangle needs three owners");
  for (int i = 0; i < 3; ++i) side.owners[i] = parse_uint(own[i], "owner");
  auto comps = split_on_char(s.substr(eq + 1), ';');
  if (comps.size() != 5) throw InvalidEntry("3-tangle vector needs five components");
  for (int i = 0; i < 5; ++i) side.vector[i] = parse_polynomial(comps[i]);
  return side;
}

inline std::string split3_side_text(const Split3Side& s) {
  std::string out = s.distinguished ? "N" + std::to_string(*s.distinguished) : "S";
  out += "[" + std::to_string(s.owners[0]) + "," + std::to_string(s.owners[1]) + "," +
         std::to_string(s.owners[2]) + "]=";
  for (int i = 0; i < 5; ++i) out += (i ? ";" : "") + to_string(s.vector[i]);
  return out;
}

}  // namespace detail

inline Split parse_split(const std::string& s) {
  if (s == "-") return std::monostate{};
  if (s.rfind("2:", 0) == 0) {
    auto halves = detail::split_on_char(s.substr(2), '/');
    if (halves.size() != 2) throw InvalidEntry("2-tangle split needs one '/'");
    auto a = detail::split_on_char(halves[0], ';'), b = detail::split_on_char(halves[1], ';');
    if (a.size() != 2 || b.size() != 2) throw InvalidEntry("2-tangle split needs two components per side");
    return Split2{parse_polynomial(a[0]), parse_polynomial(a[1]), parse_polynomial(b[0]), parse_polynomial(b[1])};
  }
  if (s.rfind("3:", 0) == 0) {
    auto halves = detail::split_on_char(s.substr(2), '/');
    if (halves.size() != 2) throw InvalidEntry("3-tangle split needs one '/'");
    return Split3{detail::parse_split3_side(halves[0]), detail::parse_split3_side(halves[1])};
  }
  throw InvalidEntry("split must be '-', '2:...' or '3:...'");
}

inline std::string split_text(const Split& s) {
  if (std::holds_alternative<Split2>(s)) {
    auto& t = std::get<Split2>(s);
    return "2:" + to_string(t.a1) + ";" + to_string(t.a2) + "/" + to_string(t.b1) + ";" + to_string(t.b2);
  }
  if (std::holds_alternative<Split3>(s)) {
    auto& t = std::get<Split3>(s);
    return "3:" + detail::split3_side_text(t.u) + "/" + detail::split3_side_text(t.v);
  }
  return "-";
}

inline Polynomial recompose(const Split& s) {
  if (std::holds_alternative<Split2>(s)) {
    auto& t = std::get<Split2>(s);
    return interior2(covariant(t.a1, t.a2), contravariant(t.b1, t.b2));
  }
  if (std::holds_alternative<Split3>(s)) {
    auto& t = std::get<Split3>(s);
    return compose_knot3(t.u.tangle(), t.v.tangle());
  }
  throw InvalidEntry("no split declared");
}

// ---------- catalog text form ----------

inline const char* catalog_header() { return "# conwaykit family catalog v1"; }

namespace detail {
inline const std::array<const char*, 11>& catalog_fields() {
  static const std::array<const char*, 11> f = {"id",   "seed",    "n",     "hand",  "cross", "cfun",
                                                "caption", "terms", "split", "fig", "erratum"};
  return f;
}
}  // namespace detail

inline FamilyRecord parse_family_line(const std::string& line, std::size_t lineno) {
  auto cols = detail::split_on_char(line, '\t');
  auto& names = detail::catalog_fields();
  if (cols.size() != names.size())
    throw ParseError("expected " + std::to_string(names.size()) + " fields, found " + std::to_string(cols.size()),
                     lineno, "line");
  std::array<std::string, 11> v;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::string key = std::string(names[i]) + "=";
    if (cols[i].rfind(key, 0) != 0)
      throw ParseError("field " + std::to_string(i + 1) + " should start with '" + key + "'", lineno, "line");
    v[i] = cols[i].substr(key.size());
  }
  FamilyRecord r;
  std::string field;
  try {
    field = "id";
    if (v[0].empty()) throw InvalidEntry("empty id");
    r.id = v[0];
    field = "seed";
    r.seed = v[1];
    field = "n";
    r.n = detail::parse_uint(v[2], "conway count");
    field = "hand";
    for (char c : v[3]) {
      if (c == 'W') r.hand.push_back(Color::White);
      else if (c == 'C') r.hand.push_back(Color::Colored);
      else throw InvalidEntry(std::string("handedness letter '") + c + "'");
    }
    if (r.hand.size() != r.n) throw InvalidEntry("handedness length differs from n");
    field = "cross";
    for (auto& t : detail::split_on_char(v[4], ',')) r.cross.push_back(detail::parse_uint(t, "crossing"));
    if (r.cross.size() != r.n) throw InvalidEntry("crossing map length differs from n");
    field = "cfun";
    r.cfunction = parse_polynomial(v[5]);
    if (to_machine(r.cfunction) != v[5]) throw InvalidEntry("cfun is not in canonical machine form");
    field = "caption";
    r.caption = v[6];
    field = "terms";
    if (v[7] != "-") r.terms = detail::parse_uint(v[7], "term count");
    field = "split";
    r.split = parse_split(v[8]);
    if (split_text(r.split) != v[8]) throw InvalidEntry("split is not in canonical form");
    field = "fig";
    r.figure = v[9];
    field = "erratum";
    r.erratum = v[10] == "-" ? "" : v[10];
  } catch (const ParseError& e) {
    throw ParseError("field " + field + ": " + e.what(), lineno, "line");
  } catch (const Error& e) {
    throw ParseError("field " + field + ": " + e.what(), lineno, "line");
  }
  return r;
}

inline std::string family_line(const FamilyRecord& r) {
  std::string cross;
  for (std::size_t i = 0; i < r.cross.size(); ++i) cross += (i ? "," : "") + std::to_string(r.cross[i]);
  std::vector<std::string> cols = {
      "id=" + r.id,
      "seed=" + r.seed,
      "n=" + std::to_string(r.n),
      "hand=" + r.hand_string(),
      "cross=" + cross,
      "cfun=" + to_machine(r.cfunction),
      "caption=" + r.caption,
      "terms=" + (r.terms ? std::to_string(*r.terms) : std::string("-")),
      "split=" + split_text(r.split),
      "fig=" + r.figure,
      "erratum=" + (r.erratum.empty() ? std::string("-") : r.erratum)};
  return detail::join(cols, "\t");
}

inline std::vector<FamilyRecord> parse_catalog(const std::string& text) {
  std::vector<FamilyRecord> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      if (line != catalog_header()) throw ParseError("missing catalog header", 1, "line");
      continue;
    }
    if (line.empty()) throw ParseError("blank line", lineno, "line");
    out.push_back(parse_family_line(line, lineno));
  }
  if (lineno == 0) throw ParseError("empty catalog", 1, "line");
  return out;
}

inline std::string store_catalog(const std::vector<FamilyRecord>& fams) {
  std::string out = std::string(catalog_header()) + "\n";
  for (auto& r : fams) out += family_line(r) + "\n";
  return out;
}

inline std::vector<SeedRecord> parse_seed_table(const std::string& text) {
  std::vector<SeedRecord> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto cols = detail::split_on_char(line, '\t');
    if (cols.size() != 6) throw ParseError("expected 6 tab-separated fields", lineno, "line");
    SeedRecord s;
    try {
      s.name = cols[0];
      s.crossings = detail::parse_uint(cols[1], "crossing count");
      s.conway_number = detail::parse_uint(cols[2], "conway number");
      s.families = detail::parse_uint(cols[3], "family count");
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno, "line");
    }
    s.diagram_file = cols[4];
    s.display = cols[5];
    out.push_back(std::move(s));
  }
  return out;
}

// ---------- canonical form under relabeling ----------

using CanonicalKey = std::vector<std::pair<std::uint32_t, Natural>>;

// Minimum over all relabelings of the variables onto 0..m-1 of the sorted (mask, coefficient) list.
inline CanonicalKey canonical_form(const Polynomial& p) {
  auto vs = variables(p);
  std::vector<std::uint32_t> vars(vs.begin(), vs.end());
  const std::size_t m = vars.size();
  if (m > 10) throw InvalidEntry("too many variables for canonical form");
  std::map<std::uint32_t, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[vars[i]] = i;
  std::vector<std::pair<std::uint32_t, Natural>> terms;
  for (auto& [mono, c] : p.terms()) {
    std::uint32_t mask = 0;
    for (auto j : mono) mask |= 1u << pos[j];
    terms.emplace_back(mask, c);
  }
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalKey best;
  bool first = true;
  CanonicalKey cur(terms.size());
  do {
    for (std::size_t t = 0; t < terms.size(); ++t) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (terms[t].first >> i & 1) mask |= 1u << perm[i];
      cur[t] = {mask, terms[t].second};
    }
    std::sort(cur.begin(), cur.end());
    if (first || cur < best) {
      best = cur;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool equivalent_under_relabeling(const Polynomial& p, const Polynomial& q) {
  return variables(p).size() == variables(q).size() && canonical_form(p) == canonical_form(q);
}

// Pairs (i,k) that never share a monomial and can be swapped: p depends on a_i + a_k only.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> mergeable_pair(const Polynomial& p) {
  auto vs = variables(p);
  std::vector<std::uint32_t> v(vs.begin(), vs.end());
  for (std::size_t x = 0; x < v.size(); ++x)
    for (std::size_t y = x + 1; y < v.size(); ++y) {
      bool together = false;
      for (auto& [m, c] : p.terms())
        if (std::count(m.begin(), m.end(), v[x]) && std::count(m.begin(), m.end(), v[y])) {
          together = true;
          break;
        }
      if (together) continue;
      if (relabel(p, {{v[x], v[y]}, {v[y], v[x]}}) == p) return std::make_pair(v[x], v[y]);
    }
  return std::nullopt;
}

// Merge summed pairs and renumber the surviving variables 1..m in increasing order.
inline Polynomial normalize_family(Polynomial p) {
  while (auto pr = mergeable_pair(p)) p = substitute(p, VarIndex(pr->second), Natural(0));
  auto vs = variables(p);
  std::map<std::uint32_t, std::uint32_t> sigma;
  std::uint32_t k = 0;
  for (auto j : vs) sigma[j] = ++k;
  return relabel(p, sigma);
}

// ---------- loaded catalog ----------

struct Catalog {
  std::vector<SeedRecord> seeds;
  std::vector<FamilyRecord> families;

  const SeedRecord* find_seed(const std::string& name) const {
    for (auto& s : seeds)
      if (s.name == name) return &s;
    return nullptr;
  }
  const FamilyRecord* find_family(const std::string& id) const {
    for (auto& f : families)
      if (f.id == id) return &f;
    return nullptr;
  }
};

inline const std::array<unsigned, 7>& expected_census() {
  static const std::array<unsigned, 7> c = {0, 1, 1, 2, 5, 12, 44};
  return c;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Consistency of records against their seeds; throws DataError.
inline void check_records(const Catalog& c) {
  std::set<std::string> ids;
  for (auto& r : c.families) {
    if (!ids.insert(r.id).second) throw DataError("duplicate family id " + r.id);
    auto* s = c.find_seed(r.seed);
    if (!s) throw DataError(r.id + ": unknown seed '" + r.seed + "'");
    if (r.n != s->crossings) throw DataError(r.id + ": n differs from the seed crossing count");
    auto sorted = r.cross;
    std::sort(sorted.begin(), sorted.end());
    for (unsigned i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw DataError(r.id + ": crossing map is not a permutation");
  }
}

inline void check_census(const Catalog& c) {
  std::array<unsigned, 7> per_n{};
  std::map<std::string, unsigned> per_seed;
  for (auto& r : c.families) {
    if (r.n < 1 || r.n > 6) throw CensusMismatch(r.id + ": conway count out of range");
    ++per_n[r.n];
    ++per_seed[r.seed];
  }
  if (c.families.size() != 65)
    throw CensusMismatch("expected 65 families, found " + std::to_string(c.families.size()));
  for (unsigned n = 1; n <= 6; ++n)
    if (per_n[n] != expected_census()[n])
      throw CensusMismatch("expected " + std::to_string(expected_census()[n]) + " families with " +
                           std::to_string(n) + " conways, found " + std::to_string(per_n[n]));
  for (auto& s : c.seeds)
    if (per_seed[s.name] != s.families)
      throw CensusMismatch("seed " + s.name + " should have " + std::to_string(s.families) + " families, found " +
                           std::to_string(per_seed[s.name]));
}

inline Catalog load_catalog(const std::string& dir) {
  Catalog c;
  try {
    c.seeds = parse_seed_table(read_file(dir + "/seeds.txt"));
    for (auto& s : c.seeds) {
      s.diagram = parse_pd(read_file(dir + "/seeds/" + s.diagram_file));
      if (s.diagram.crossings.size() != s.crossings)
        throw DataError("seed " + s.name + ": diagram has " + std::to_string(s.diagram.crossings.size()) +
                        " crossings, table says " + std::to_string(s.crossings));
    }
    c.families = parse_catalog(read_file(dir + "/catalog.txt"));
  } catch (const ParseError& e) {
    throw DataError(std::string("catalog data: ") + e.what());
  }
  check_records(c);
  check_census(c);
  return c;
}

// Factors with pairwise disjoint variables whose product is p (coefficients 1 only).
inline std::vector<Polynomial> disjoint_factors(const Polynomial& p) {
  auto vs = variables(p);
  std::vector<std::uint32_t> v(vs.begin(), vs.end());
  if (v.size() < 2 || !all_coefficients_one(p)) return {p};
  for (std::uint32_t mask = 1; mask + 1 < (1u << v.size()); mask += 2) {
    std::set<std::uint32_t> left;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask >> i & 1) left.insert(v[i]);
    Polynomial a, b;
    std::set<Monomial> ma, mb;
    for (auto& [m, c] : p.terms()) {
      Monomial x, y;
      for (auto k : m) (left.count(k) ? x : y).push_back(k);
      ma.insert(x);
      mb.insert(y);
    }
    if (ma.size() * mb.size() != p.terms().size()) continue;
    for (auto& m : ma) a.add_term(m, 1);
    for (auto& m : mb) b.add_term(m, 1);
    if (a * b != p) continue;
    auto fa = disjoint_factors(a), fb = disjoint_factors(b);
    fa.insert(fa.end(), fb.begin(), fb.end());
    return fa;
  }
  return {p};
}

// Name of the catalog family (or connected sum of families, joined by " # ") equal to p up to
// relabeling and merging of summed conways.
inline std::optional<std::string> identify_family(const Catalog& cat, const Polynomial& p) {
  if (p == Polynomial(1)) return std::string("unknot");
  std::vector<std::string> names;
  for (auto& f : disjoint_factors(p)) {
    if (f == Polynomial(1)) continue;
    auto red = normalize_family(f);
    auto m = variables(red).size();
    auto key = canonical_form(red);
    std::optional<std::string> hit;
    for (auto& fam : cat.families)
      if (fam.n == m && canonical_form(fam.cfunction) == key) {
        hit = fam.id;
        break;
      }
    if (!hit) return std::nullopt;
    names.push_back(*hit);
  }
  if (names.empty()) return std::string("unknot");
  return detail::join(names, " # ");
}

// ---------- JSON ----------

inline nlohmann::json to_json(const Split& s) {
  using nlohmann::json;
  if (std::holds_alternative<Split2>(s)) {
    auto& t = std::get<Split2>(s);
    return {{"kind", "2-tangle"},
            {"left", {polynomial_to_json(t.a1), polynomial_to_json(t.a2)}},
            {"right", {polynomial_to_json(t.b1), polynomial_to_json(t.b2)}}};
  }
  if (std::holds_alternative<Split3>(s)) {
    auto& t = std::get<Split3>(s);
    auto side = [](const Split3Side& x) {
      json v = json::array();
      for (auto& c : x.vector) v.push_back(polynomial_to_json(c));
      json j = {{"owners", x.owners}, {"vector", v}};
      j["distinguished"] = x.distinguished ? json(*x.distinguished) : json(nullptr);
      return j;
    };
    return {{"kind", "3-tangle"}, {"left", side(t.u)}, {"right", side(t.v)}};
  }
  return nullptr;
}

inline Split split_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::monostate{};
  auto kind = j.at("kind").get<std::string>();
  if (kind == "2-tangle") {
    auto& l = j.at("left");
    auto& r = j.at("right");
    return Split2{polynomial_from_json(l.at(0)), polynomial_from_json(l.at(1)), polynomial_from_json(r.at(0)),
                  polynomial_from_json(r.at(1))};
  }
  if (kind == "3-tangle") {
    auto side = [](const nlohmann::json& x) {
      Split3Side s;
      s.owners = x.at("owners").get<std::array<std::uint32_t, 3>>();
      if (!x.at("distinguished").is_null()) s.distinguished = x.at("distinguished").get<std::uint32_t>();
      for (int i = 0; i < 5; ++i) s.vector[i] = polynomial_from_json(x.at("vector").at(i));
      return s;
    };
    return Split3{side(j.at("left")), side(j.at("right"))};
  }
  throw DataError("unknown split kind '" + kind + "'");
}

inline nlohmann::json to_json(const FamilyRecord& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["hand"] = r.hand_string();
  j["cross"] = r.cross;
  j["cfunction"] = polynomial_to_json(r.cfunction);
  j["cfunction_text"] = to_string(r.cfunction);
  j["caption"] = r.caption;
  j["terms"] = r.terms ? nlohmann::json(*r.terms) : nlohmann::json(nullptr);
  j["split"] = to_json(r.split);
  j["figure"] = r.figure;
  j["erratum"] = r.erratum.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.erratum);
  return j;
}

inline FamilyRecord family_from_json(const nlohmann::json& j) {
  try {
    FamilyRecord r;
    r.id = j.at("id").get<std::string>();
    r.seed = j.at("seed").get<std::string>();
    r.n = j.at("n").get<unsigned>();
    for (char c : j.at("hand").get<std::string>()) {
      if (c != 'W' && c != 'C') throw DataError(std::string("handedness letter '") + c + "'");
      r.hand.push_back(c == 'W' ? Color::White : Color::Colored);
    }
    r.cross = j.at("cross").get<std::vector<unsigned>>();
    r.cfunction = polynomial_from_json(j.at("cfunction"));
    r.caption = j.at("caption").get<std::string>();
    if (!j.at("terms").is_null()) r.terms = j.at("terms").get<unsigned>();
    r.split = split_from_json(j.at("split"));
    r.figure = j.at("figure").get<std::string>();
    if (!j.at("erratum").is_null()) r.erratum = j.at("erratum").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("family record: ") + e.what());
  } catch (const ParseError& e) {
    throw DataError(std::string("family record: ") + e.what());
  }
}

inline nlohmann::json families_to_json(const std::vector<FamilyRecord>& fams) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& f : fams) arr.push_back(to_json(f));
  return {{"families", arr}};
}

inline std::vector<FamilyRecord> families_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("families") || !j["families"].is_array())
    throw DataError("expected an object with a \"families\" array");
  std::vector<FamilyRecord> out;
  for (auto& f : j["families"]) out.push_back(family_from_json(f));
  return out;
}

// ---------- oracle ----------

struct SeedGeometry {
  Diagram diagram;
  explicit SeedGeometry(const SeedRecord& s) : diagram(Diagram::from_pd(s.diagram)) {}
};

inline std::vector<Color> crossing_colors(const FamilyRecord& r) {
  std::vector<Color> c(r.n);
  for (unsigned j = 0; j < r.n; ++j) c[r.cross[j]] = r.hand[j];
  return c;
}

inline Expansion expand_family(const Diagram& seed, const FamilyRecord& r, const std::vector<Natural>& a) {
  if (a.size() != r.n) throw InvalidEntry("assignment needs " + std::to_string(r.n) + " values");
  std::vector<unsigned> counts(r.n);
  for (unsigned j = 0; j < r.n; ++j) {
    if (a[j] > 10000) throw InvalidEntry("conway values above 10000 are not expanded");
    counts[r.cross[j]] = a[j].convert_to<unsigned>();
  }
  return expand_twists(seed, crossing_colors(r), counts);
}

struct OracleResult {
  Natural determinant;
  Natural cfunction;
  bool agree() const { return determinant == cfunction; }
};

inline OracleResult oracle_check(const Diagram& seed, const FamilyRecord& r, const std::vector<Natural>& a) {
  auto e = expand_family(seed, r, a);
  return {e.split ? Natural(0) : determinant(e.diagram), evaluate(r.cfunction, a)};
}

inline OracleResult oracle_check(const Catalog& c, const FamilyRecord& r, const std::vector<Natural>& a) {
  auto* s = c.find_seed(r.seed);
  if (!s) throw DataError("unknown seed " + r.seed);
  return oracle_check(Diagram::from_pd(s->diagram), r, a);
}

// C-function read off the seed's white Tait graph, with a_j on crossing cross[j-1].
inline Polynomial tait_cfunction(const Diagram& seed, const FamilyRecord& r) {
  std::vector<std::uint32_t> vars(r.n);
  for (unsigned j = 0; j < r.n; ++j) vars[r.cross[j]] = j + 1;
  return tait_cfunction(seed, crossing_colors(r), vars);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline constexpr std::uint64_t sampling_seed = 0x5eedc0de2024ull;

// {1,2,3}^n for n <= 4, otherwise 200 draws from {1..4}^n seeded by the family id.
inline std::vector<std::vector<Natural>> sampling_grid(const FamilyRecord& r) {
  std::vector<std::vector<Natural>> out;
  if (r.n <= 4) {
    std::vector<unsigned> v(r.n, 1);
    for (;;) {
      out.emplace_back(v.begin(), v.end());
      std::size_t i = 0;
      while (i < r.n && v[i] == 3) v[i++] = 1;
      if (i == r.n) break;
      ++v[i];
    }
    return out;
  }
  std::mt19937_64 rng(sampling_seed ^ fnv1a(r.id));
  for (int k = 0; k < 200; ++k) {
    std::vector<Natural> a(r.n);
    for (auto& x : a) x = static_cast<unsigned>(rng() % 4 + 1);
    out.push_back(std::move(a));
  }
  return out;
}

// ---------- verification ----------

enum class Severity { Hard, Warning };

struct CheckResult {
  std::string name;
  Severity severity = Severity::Hard;
  bool passed = true;
  std::string detail;
};

struct FamilyReport {
  std::string id;
  std::string seed;
  std::vector<CheckResult> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](auto& c) { return c.passed || c.severity == Severity::Warning; });
  }
  const CheckResult* find(const std::string& name) const {
    for (auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  bool caption = true;
  bool oracle = true;
  bool zero_reduction = true;
  bool stop_at_first_failure = false;
};

namespace detail {
inline std::string assignment_text(const std::vector<Natural>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].str();
  return s;
}
}  // namespace detail

inline FamilyReport verify_family(const Catalog& cat, const FamilyRecord& r, const VerifyOptions& opt = {}) {
  FamilyReport rep{r.id, r.seed, {}};
  auto* seed = cat.find_seed(r.seed);
  auto add = [&](std::string name, bool ok, std::string detail, Severity sev = Severity::Hard) {
    rep.checks.push_back({std::move(name), sev, ok, std::move(detail)});
    return ok || sev == Severity::Warning || !opt.stop_at_first_failure;
  };
  const auto& p = r.cfunction;
  std::size_t count = monomial_count(p);

  if (!add("coefficients", all_coefficients_one(p),
           all_coefficients_one(p) ? "all coefficients 1" : "a coefficient differs from 1"))
    return rep;
  if (!add("monomials", seed && count == seed->conway_number,
           std::to_string(count) + " monomials, seed conway number " +
               (seed ? seed->conway_number.str() : std::string("?"))))
    return rep;
  if (r.terms) {
    if (!add("caption-terms", count == *r.terms,
             std::to_string(count) + " monomials, caption states " + std::to_string(*r.terms)))
      return rep;
  }
  auto par = parity_class(p);
  if (!add("parity", par != Parity::Mixed, to_string(par))) return rep;
  {
    auto vs = variables(p);
    bool ok = vs.size() == r.n && (vs.empty() || (*vs.begin() == 1 && *vs.rbegin() == r.n));
    if (!add("variables", ok, ok ? "a1..a" + std::to_string(r.n) : "variables are not exactly a1..an")) return rep;
  }
  if (opt.caption) {
    if (!r.erratum.empty()) {
      add("caption", true, "erratum: " + r.erratum);
    } else {
      bool ok = false;
      std::string why;
      try {
        ok = parse_polynomial(r.caption) == p;
        why = ok ? "caption text matches" : "caption text expands to a different polynomial";
      } catch (const Error& e) {
        why = e.what();
      }
      if (!add("caption", ok, why)) return rep;
    }
  }
  if (!std::holds_alternative<std::monostate>(r.split)) {
    bool ok = false;
    std::string why;
    try {
      ok = recompose(r.split) == p;
      why = ok ? (std::holds_alternative<Split2>(r.split) ? "2-tangle" : "3-tangle") + std::string(" split recomposes")
               : "split recomposes to " + to_string(recompose(r.split));
    } catch (const Error& e) {
      why = e.what();
    }
    if (!add("split", ok, why)) return rep;
  }
  if (opt.zero_reduction) {
    std::vector<std::string> notes;
    bool ok = true;
    for (unsigned j = 1; j <= r.n; ++j) {
      std::string tag = "a" + std::to_string(j) + "=0 ";
      auto q = substitute(p, VarIndex(j), Natural(0));
      if (!all_coefficients_one(q)) {
        ok = false;
        notes.push_back(tag + "gives a coefficient above 1");
      } else if (q.is_zero()) {
        notes.push_back(tag + "split");
      } else if (auto hit = identify_family(cat, q)) {
        notes.push_back(tag + "-> " + *hit);
      } else {
        ok = false;
        notes.push_back(tag + "unmatched");
      }
    }
    add("zero-reduction", ok, detail::join(notes, "; "), Severity::Warning);
  }
  if (opt.oracle) {
    if (!seed) {
      add("oracle", false, "seed not found");
      return rep;
    }
    Diagram d = Diagram::from_pd(seed->diagram);
    std::size_t n = 0, bad = 0;
    std::string first;
    try {
      for (auto& a : sampling_grid(r)) {
        ++n;
        auto o = oracle_check(d, r, a);
        if (!o.agree()) {
          if (!bad)
            first = "(" + detail::assignment_text(a) + "): determinant " + o.determinant.str() + ", C-function " +
                    o.cfunction.str();
          ++bad;
          if (opt.stop_at_first_failure) break;
        }
      }
      add("oracle", bad == 0,
          bad ? std::to_string(bad) + "/" + std::to_string(n) + " mismatches, first " + first
              : std::to_string(n) + " assignments agree");
    } catch (const Error& e) {
      add("oracle", false, e.what());
    }
  }
  return rep;
}

// Verification of several families in parallel; reports come back in input order.
inline std::vector<FamilyReport> verify_all(const Catalog& cat, const std::vector<const FamilyRecord*>& which,
                                            const VerifyOptions& opt = {}, unsigned jobs = 0) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<FamilyReport> out(which.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < which.size();) out[i] = verify_family(cat, *which[i], opt);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(jobs, which.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

// ---------- enumeration ----------

struct Candidate {
  std::vector<Color> colors;  // per seed crossing
  Polynomial cfunction;       // a_{X+1} on crossing X
  std::vector<std::string> catalog_ids;
};

struct Enumeration {
  std::size_t colorings = 0;
  std::size_t discarded_merge = 0;  // fewer genuine conways than crossings
  std::vector<Candidate> candidates;
};

// Every coloring of the seed crossings, minus those whose C-function collapses to fewer conways,
// deduplicated up to relabeling (which also identifies mirror images and diagram symmetries).
inline Enumeration enumerate_families(const Diagram& seed, const Catalog* cat = nullptr) {
  Enumeration en;
  const std::size_t n = seed.crossings();
  std::vector<std::uint32_t> vars(n);
  std::iota(vars.begin(), vars.end(), 1u);
  std::map<CanonicalKey, std::size_t> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    ++en.colorings;
    std::vector<Color> colors(n);
    for (std::size_t x = 0; x < n; ++x) colors[x] = (mask >> x & 1) ? Color::Colored : Color::White;
    auto p = tait_cfunction(seed, colors, vars);
    if (variables(p).size() != n || mergeable_pair(p)) {
      ++en.discarded_merge;
      continue;
    }
    auto key = canonical_form(p);
    if (seen.count(key)) continue;
    seen[key] = en.candidates.size();
    Candidate c{colors, p, {}};
    if (cat)
      for (auto& f : cat->families)
        if (f.n == n && canonical_form(f.cfunction) == key) c.catalog_ids.push_back(f.id);
    en.candidates.push_back(std::move(c));
  }
  return en;
}

}  // namespace conwaykit
