#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace conwaykit {

// Each crossing lists four edge labels counterclockwise, starting at the incoming under-strand.
// "O" lines in the text form stand for crossingless closed loops.
struct PDCode {
  std::vector<std::array<long, 4>> crossings;
  unsigned free_loops = 0;
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

inline PDCode parse_pd(std::string_view text) {
  PDCode pd;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "O") {
      ++pd.free_loops;
    } else if (tag == "X") {
      std::array<long, 4> t{};
      for (auto& e : t)
        if (!(ls >> e) || e < 0) throw ParseError("crossing needs four non-negative edge labels", lineno, "line");
      pd.crossings.push_back(t);
    } else {
      throw ParseError("expected 'X' or 'O', found '" + tag + "'", lineno, "line");
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing token '" + extra + "'", lineno, "line");
  }
  return pd;
}

inline std::string to_text(const PDCode& pd) {
  std::string out;
  for (auto& t : pd.crossings)
    out += "X " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + " " +
           std::to_string(t[3]) + "\n";
  for (unsigned i = 0; i < pd.free_loops; ++i) out += "O\n";
  return out;
}

// Endpoint 4X+s is slot s of crossing X; mate[e] is the far end of the edge leaving e.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<int> mate, unsigned loops) : mate_(std::move(mate)), loops_(loops) {
    if (mate_.size() % 4) throw InvalidEntry("endpoint count is not a multiple of 4");
    for (std::size_t e = 0; e < mate_.size(); ++e) {
      int m = mate_[e];
      if (m < 0 || static_cast<std::size_t>(m) >= mate_.size() || mate_[m] != static_cast<int>(e) ||
          m == static_cast<int>(e))
        throw InvalidEntry("endpoint pairing is not an involution");
    }
  }

  static Diagram from_pd(const PDCode& pd) {
    std::map<long, std::vector<int>> occ;
    for (std::size_t x = 0; x < pd.crossings.size(); ++x)
      for (int s = 0; s < 4; ++s) occ[pd.crossings[x][s]].push_back(static_cast<int>(4 * x + s));
    std::vector<int> mate(4 * pd.crossings.size(), -1);
    for (auto& [label, ends] : occ) {
      if (ends.size() != 2)
        throw InvalidEntry("edge label " + std::to_string(label) + " appears " + std::to_string(ends.size()) +
                           " times");
      mate[ends[0]] = ends[1];
      mate[ends[1]] = ends[0];
    }
    return Diagram(std::move(mate), pd.free_loops);
  }

  std::size_t crossings() const { return mate_.size() / 4; }
  unsigned free_loops() const { return loops_; }
  const std::vector<int>& mate() const { return mate_; }
  int mate(int e) const { return mate_[e]; }

  // Labels edges 1..2n along each component; tuples rotated to start at the incoming under-strand.
  PDCode to_pd() const {
    std::vector<long> label(mate_.size(), 0);
    std::vector<char> incoming(mate_.size(), 0);
    long next = 0;
    for (std::size_t s = 0; s < mate_.size(); ++s) {
      if (label[s]) continue;
      int x = static_cast<int>(s);
      while (!label[x]) {
        int y = mate_[x];
        label[x] = label[y] = ++next;
        incoming[y] = 1;
        x = 4 * (y / 4) + (y % 4 + 2) % 4;
      }
    }
    PDCode pd;
    pd.free_loops = loops_;
    for (std::size_t c = 0; c < crossings(); ++c) {
      int r = incoming[4 * c] ? 0 : 2;
      std::array<long, 4> t{};
      for (int k = 0; k < 4; ++k) t[k] = label[4 * c + (r + k) % 4];
      pd.crossings.push_back(t);
    }
    return pd;
  }

  // number of connected pieces of the crossing graph, free loops included
  std::size_t pieces() const {
    std::size_t n = crossings();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e = 0; e < mate_.size(); ++e) parent[find(e / 4)] = find(mate_[e] / 4);
    std::size_t k = loops_;
    for (std::size_t x = 0; x < n; ++x) k += find(x) == static_cast<int>(x);
    return k;
  }

  // link components
  std::size_t components() const {
    std::vector<char> seen(mate_.size(), 0);
    std::size_t k = loops_;
    for (std::size_t s = 0; s < mate_.size(); ++s) {
      if (seen[s]) continue;
      ++k;
      int x = static_cast<int>(s);
      while (!seen[x]) {
        int y = mate_[x];
        seen[x] = seen[y] = 1;
        x = 4 * (y / 4) + (y % 4 + 2) % 4;
      }
    }
    return k;
  }

  bool split() const { return pieces() > 1; }

 private:
  std::vector<int> mate_;
  unsigned loops_ = 0;
};

// Corner 4X+i is the angle between slots i and i+1 of crossing X.
struct Faces {
  std::vector<std::vector<int>> corners;
  std::vector<int> face_of;
  std::size_t size() const { return corners.size(); }
};

inline Faces faces(const Diagram& d) {
  Faces f;
  f.face_of.assign(4 * d.crossings(), -1);
  for (std::size_t c = 0; c < f.face_of.size(); ++c) {
    if (f.face_of[c] >= 0) continue;
    int id = static_cast<int>(f.corners.size());
    f.corners.emplace_back();
    int x = static_cast<int>(c);
    while (f.face_of[x] < 0) {
      f.face_of[x] = id;
      f.corners.back().push_back(x);
      x = d.mate(4 * (x / 4) + (x % 4 + 1) % 4);
    }
  }
  return f;
}

// F for a connected diagram; a lone loop bounds two faces
inline std::size_t face_count(const Diagram& d) {
  if (d.crossings() == 0) return d.free_loops() + 1;
  return faces(d).size();
}

inline long euler_characteristic(const Diagram& d) {
  long v = static_cast<long>(d.crossings());
  return v - 2 * v + static_cast<long>(face_count(d));
}

struct Checkerboard {
  Faces faces;
  std::vector<char> white;
  int exterior = -1;

  bool corner_white(int x, int i) const { return white[faces.face_of[4 * x + i]]; }
  std::size_t white_count() const { return std::count(white.begin(), white.end(), 1); }
};

// Exterior: the face with the most corners (ties: the one holding the lowest corner), colored white.
inline Checkerboard checkerboard(const Diagram& d) {
  if (d.crossings() == 0) throw InvalidEntry("checkerboard needs at least one crossing");
  if (d.split()) throw InvalidEntry("checkerboard needs a connected diagram");
  Checkerboard cb;
  cb.faces = faces(d);
  auto& f = cb.faces;
  if (f.size() != d.crossings() + 2)
    throw NonPlanar("diagram has " + std::to_string(f.size()) + " faces, expected " +
                    std::to_string(d.crossings() + 2));
  std::vector<int> col(f.size(), -1);
  col[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int g = stack.back();
    stack.pop_back();
    for (int c : f.corners[g]) {
      for (int dlt : {1, 3}) {
        int h = f.face_of[4 * (c / 4) + (c % 4 + dlt) % 4];
        if (col[h] < 0) {
          col[h] = 1 - col[g];
          stack.push_back(h);
        } else if (col[h] == col[g]) {
          throw NonPlanar("faces cannot be two-colored");
        }
      }
    }
  }
  int ext = 0;
  for (std::size_t g = 1; g < f.size(); ++g) {
    auto lo = [&](std::size_t k) { return *std::min_element(f.corners[k].begin(), f.corners[k].end()); };
    if (f.corners[g].size() > f.corners[ext].size() ||
        (f.corners[g].size() == f.corners[ext].size() && lo(g) < lo(ext)))
      ext = static_cast<int>(g);
  }
  cb.exterior = ext;
  cb.white.resize(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) cb.white[g] = col[g] == col[ext];
  return cb;
}

namespace detail {

// Replace crossing X by a chain of count[X] crossings whose bigons sit in corner frame[X]
// (and frame[X]+2); count 0 smooths X so that those two corners merge.
inline Diagram replace_crossings(const Diagram& d, const std::vector<int>& frame,
                                 const std::vector<unsigned>& count) {
  enum Role { SW = 0, SE = 1, NE = 2, NW = 3 };
  const std::size_t n = d.crossings();
  std::vector<int> base(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) base[x + 1] = base[x] + static_cast<int>(count[x]);
  auto slot = [&](std::size_t x, unsigned i, Role role) {
    int r = frame[x] % 2 == 0 ? role : (role + 3) % 4;
    return 4 * (base[x] + static_cast<int>(i)) + r;
  };
  std::vector<int> newmate(4 * base[n], -1);
  std::vector<int> attach(4 * n, -1);
  std::vector<int> pass(4 * n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    auto port = [&](int m) { return static_cast<int>(4 * x) + (frame[x] + m) % 4; };
    unsigned k = count[x];
    if (k == 0) {
      pass[port(0)] = port(3);
      pass[port(3)] = port(0);
      pass[port(1)] = port(2);
      pass[port(2)] = port(1);
      continue;
    }
    attach[port(0)] = slot(x, 0, SW);
    attach[port(1)] = slot(x, 0, SE);
    attach[port(2)] = slot(x, k - 1, NE);
    attach[port(3)] = slot(x, k - 1, NW);
    for (unsigned i = 0; i + 1 < k; ++i) {
      int a = slot(x, i, NE), b = slot(x, i + 1, SE);
      newmate[a] = b;
      newmate[b] = a;
      a = slot(x, i, NW), b = slot(x, i + 1, SW);
      newmate[a] = b;
      newmate[b] = a;
    }
  }
  std::vector<char> seen(4 * n, 0);
  for (std::size_t p = 0; p < 4 * n; ++p) {
    if (attach[p] < 0) continue;
    seen[p] = 1;
    int o = d.mate(static_cast<int>(p));
    while (attach[o] < 0) {
      seen[o] = 1;
      int o2 = pass[o];
      seen[o2] = 1;
      o = d.mate(o2);
    }
    seen[o] = 1;
    newmate[attach[p]] = attach[o];
  }
  unsigned loops = d.free_loops();
  for (std::size_t p = 0; p < 4 * n; ++p) {
    if (seen[p]) continue;
    ++loops;
    int o = static_cast<int>(p);
    while (!seen[o]) {
      seen[o] = 1;
      int m = d.mate(o);
      seen[m] = 1;
      o = pass[m];
    }
  }
  return Diagram(std::move(newmate), loops);
}

}  // namespace detail

struct Expansion {
  Diagram diagram;
  bool split = false;
};

// Replace every seed crossing X by counts[X] crossings forming bigons of colors[X].
inline Expansion expand_twists(const Diagram& seed, const std::vector<Color>& colors,
                               const std::vector<unsigned>& counts) {
  if (colors.size() != seed.crossings() || counts.size() != seed.crossings())
    throw InvalidEntry("handedness and assignment must cover every seed crossing");
  auto cb = checkerboard(seed);
  std::vector<int> frame(seed.crossings());
  for (std::size_t x = 0; x < seed.crossings(); ++x) {
    bool want_white = colors[x] == Color::White;
    frame[x] = cb.corner_white(static_cast<int>(x), 0) == want_white ? 0 : 1;
  }
  Expansion r{detail::replace_crossings(seed, frame, counts), false};
  r.split = r.diagram.split() || (r.diagram.crossings() == 0 && r.diagram.free_loops() != 1);
  return r;
}

inline Expansion expand_twists(const PDCode& seed, const std::vector<Color>& colors,
                               const std::vector<unsigned>& counts) {
  return expand_twists(Diagram::from_pd(seed), colors, counts);
}

// Crossings whose two opposite corners lie in one face.
inline std::vector<int> nugatory_crossings(const Diagram& d) {
  std::vector<int> out;
  if (d.crossings() == 0) return out;
  auto f = faces(d);
  for (std::size_t x = 0; x < d.crossings(); ++x)
    for (int i = 0; i < 2; ++i)
      if (f.face_of[4 * x + i] == f.face_of[4 * x + i + 2]) {
        out.push_back(static_cast<int>(x));
        break;
      }
  return out;
}

// Untwist nugatory crossings until none remain.
inline Diagram reduce(Diagram d) {
  for (;;) {
    if (d.crossings() == 0) return d;
    auto f = faces(d);
    int hit = -1, frame = 0;
    for (std::size_t x = 0; x < d.crossings() && hit < 0; ++x)
      for (int i = 0; i < 2; ++i)
        if (f.face_of[4 * x + i] == f.face_of[4 * x + i + 2]) {
          hit = static_cast<int>(x);
          frame = i + 1;
          break;
        }
    if (hit < 0) return d;
    std::vector<int> frames(d.crossings(), 0);
    std::vector<unsigned> counts(d.crossings(), 1);
    frames[hit] = frame;
    counts[hit] = 0;
    d = detail::replace_crossings(d, frames, counts);
  }
}

using IntMatrix = std::vector<std::vector<Integer>>;

// Unreduced Goeritz matrix on the white faces (indexed in face order).
inline IntMatrix goeritz_matrix(const Diagram& d, const Checkerboard& cb) {
  std::vector<int> index(cb.faces.size(), -1);
  int w = 0;
  for (std::size_t g = 0; g < cb.faces.size(); ++g)
    if (cb.white[g]) index[g] = w++;
  IntMatrix m(w, std::vector<Integer>(w, 0));
  for (std::size_t x = 0; x < d.crossings(); ++x) {
    int k = cb.corner_white(static_cast<int>(x), 0) ? 0 : 1;
    int eta = k == 0 ? 1 : -1;
    int f = index[cb.faces.face_of[4 * x + k]];
    int g = index[cb.faces.face_of[4 * x + k + 2]];
    if (f == g) continue;
    m[f][g] -= eta;
    m[g][f] -= eta;
    m[f][f] += eta;
    m[g][g] += eta;
  }
  return m;
}

// fraction-free Gaussian elimination
inline Integer bareiss_determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline Natural determinant(const Diagram& input) {
  if (input.split()) return 0;
  Diagram d = reduce(input);
  if (d.split()) return 0;
  if (d.crossings() == 0) return d.free_loops() == 1 ? 1 : 0;
  auto cb = checkerboard(d);
  auto m = goeritz_matrix(d, cb);
  m.pop_back();
  for (auto& row : m) row.pop_back();
  Integer det = abs(bareiss_determinant(std::move(m)));
  return Natural(det);
}

inline Natural determinant(const PDCode& pd) { return determinant(Diagram::from_pd(pd)); }

// White Tait graph of the seed: white faces joined by one edge per crossing.
struct TaitGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<int, int>> edges;  // indexed by crossing
};

inline TaitGraph white_tait_graph(const Diagram& d) {
  auto cb = checkerboard(d);
  std::vector<int> index(cb.faces.size(), -1);
  TaitGraph t;
  for (std::size_t g = 0; g < cb.faces.size(); ++g)
    if (cb.white[g]) index[g] = static_cast<int>(t.vertices++);
  for (std::size_t x = 0; x < d.crossings(); ++x) {
    int k = cb.corner_white(static_cast<int>(x), 0) ? 0 : 1;
    t.edges.emplace_back(index[cb.faces.face_of[4 * x + k]], index[cb.faces.face_of[4 * x + k + 2]]);
  }
  return t;
}

inline std::vector<std::uint64_t> spanning_trees(const TaitGraph& g) {
  std::vector<std::uint64_t> out;
  const std::size_t m = g.edges.size();
  if (m > 63) throw InvalidEntry("too many edges for spanning-tree enumeration");
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) + 1 != g.vertices) continue;
    std::vector<int> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      int a = find(g.edges[e].first), b = find(g.edges[e].second);
      if (a == b) ok = false;
      parent[a] = b;
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

// Symbolic C-function of a seed with a handedness per crossing and variable per crossing.
// A white conway is a series edge of the white Tait graph, a colored one a parallel edge;
// each spanning tree T contributes the conways of T that are colored and the white ones outside T.
inline Polynomial tait_cfunction(const Diagram& seed, const std::vector<Color>& colors,
                                 const std::vector<std::uint32_t>& vars) {
  if (seed.crossings() == 0) return Polynomial(1);
  auto g = white_tait_graph(seed);
  Polynomial p;
  for (auto t : spanning_trees(g)) {
    Monomial m;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      bool in_tree = t >> e & 1;
      if (in_tree == (colors[e] == Color::Colored)) m.push_back(vars[e]);
    }
    p.add_term(std::move(m), 1);
  }
  return p;
}

}  // namespace conwaykit
