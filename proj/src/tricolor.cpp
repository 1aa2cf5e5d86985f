#include "spheretri/tricolor.hpp"

#include "spheretri/canonical.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace spheretri {

char color_letter(Color c) {
  switch (c) {
    case Color::Red: return 'r';
    case Color::Green: return 'g';
    case Color::Blue: return 'b';
  }
  return '?';
}

EdgeIndex::EdgeIndex(const PlaneTriangulation& t)
    : n_(static_cast<std::size_t>(t.order())),
      edges_(spheretri::edges(t)),
      faces_(spheretri::faces(t)),
      slot_(n_ * n_, -1) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto u = static_cast<std::size_t>(edges_[i].u);
    const auto v = static_cast<std::size_t>(edges_[i].v);
    slot_[u * n_ + v] = slot_[v * n_ + u] = static_cast<int>(i);
  }
  face_edges_.reserve(faces_.size());
  for (const auto& f : faces_) {
    face_edges_.push_back({at(f.v[0], f.v[1]), at(f.v[1], f.v[2]), at(f.v[2], f.v[0])});
  }
}

int EdgeIndex::at(VertexId a, VertexId b) const {
  const int s = (a >= 0 && b >= 0 && static_cast<std::size_t>(a) < n_ && static_cast<std::size_t>(b) < n_)
                    ? slot_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]
                    : -1;
  if (s < 0) throw Error(ErrorCode::EdgeAbsent, "no edge " + std::to_string(a) + "-" + std::to_string(b));
  return s;
}

bool validate(const PlaneTriangulation& t, const EdgeColoring& c) {
  if (c.size() != static_cast<std::size_t>(t.edge_count())) {
    throw Error(ErrorCode::PartialColoring, "colouring has " + std::to_string(c.size()) + " entries for " +
                                                std::to_string(t.edge_count()) + " edges");
  }
  const EdgeIndex idx(t);
  for (std::size_t i = 0; i < idx.faces().size(); ++i) {
    const auto& fe = idx.face_edges(i);
    const auto a = c[static_cast<std::size_t>(fe[0])];
    const auto b = c[static_cast<std::size_t>(fe[1])];
    const auto d = c[static_cast<std::size_t>(fe[2])];
    if (a == b || b == d || a == d) return false;
  }
  return true;
}

bool validate(const PlaneTriangulation& t, const PartialColoring& c) {
  EdgeColoring total;
  total.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) throw Error(ErrorCode::PartialColoring, "edge " + std::to_string(i) + " is unassigned");
    total.push_back(*c[i]);
  }
  return validate(t, total);
}

namespace {

ForcingResult force_at(const PlaneTriangulation& t, const EdgeIndex& idx, const PartialColoring& partial, VertexId v) {
  unsigned used = 0;
  int colored = 0;
  int free_edge = -1;
  for (VertexId u : t.rotation(v)) {
    const int ei = idx.at(v, u);
    const auto& c = partial[static_cast<std::size_t>(ei)];
    if (!c) {
      free_edge = ei;
      continue;
    }
    const unsigned bit = 1u << static_cast<unsigned>(*c);
    if (used & bit) return {ForcingResult::Kind::Contradiction};
    used |= bit;
    ++colored;
  }
  if (colored != 2) return {};
  for (std::uint8_t c = 0; c < 3; ++c) {
    if (!(used & (1u << c))) return {ForcingResult::Kind::Forced, free_edge, static_cast<Color>(c)};
  }
  return {};
}

}  // namespace

ForcingResult degree3_forcing(const PlaneTriangulation& t, const PartialColoring& partial, VertexId v) {
  if (v < 0 || v >= t.order() || t.degree(v) != 3) {
    throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " does not have degree 3");
  }
  if (partial.size() != static_cast<std::size_t>(t.edge_count())) {
    throw Error(ErrorCode::PartialColoring, "partial colouring size does not match the edge count");
  }
  return force_at(t, EdgeIndex(t), partial, v);
}

namespace {

// Backtracking over edge colours with unit propagation. Colours are stored
// as 0..2, -1 for unassigned.
class ColoringSearch {
 public:
  ColoringSearch(const PlaneTriangulation& t, const ColoringOptions& options) : t_(t), idx_(t), options_(options) {
    const auto ne = idx_.edges().size();
    edge_faces_.resize(ne);
    for (std::size_t f = 0; f < idx_.faces().size(); ++f) {
      for (int e : idx_.face_edges(f)) edge_faces_[static_cast<std::size_t>(e)].push_back(f);
    }
    for (VertexId v = 0; v < t.order(); ++v) {
      if (t.degree(v) == 3) degree3_.push_back(v);
    }
  }

  void run(const std::function<void(const std::vector<std::int8_t>&)>& visit) {
    std::vector<std::int8_t> colors(idx_.edges().size(), -1);
    Face base = idx_.faces().front();
    if (options_.base_face) {
      const auto& want = *options_.base_face;
      const auto it = std::find_if(idx_.faces().begin(), idx_.faces().end(), [&](const Face& f) {
        return f == want || f == Face{{want.v[1], want.v[2], want.v[0]}} || f == Face{{want.v[2], want.v[0], want.v[1]}};
      });
      if (it == idx_.faces().end()) throw Error(ErrorCode::FaceAbsent, "base face is not a traced face");
      base = want;
    }
    colors[static_cast<std::size_t>(idx_.at(base.v[0], base.v[1]))] = 0;
    colors[static_cast<std::size_t>(idx_.at(base.v[1], base.v[2]))] = 1;
    colors[static_cast<std::size_t>(idx_.at(base.v[2], base.v[0]))] = 2;
    if (propagate(colors)) descend(colors, visit);
  }

 private:
  // Returns false on contradiction.
  bool propagate(std::vector<std::int8_t>& colors) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t f = 0; f < idx_.faces().size(); ++f) {
        const auto& fe = idx_.face_edges(f);
        unsigned used = 0;
        int free_edge = -1, free_count = 0;
        for (int e : fe) {
          const auto c = colors[static_cast<std::size_t>(e)];
          if (c < 0) {
            free_edge = e;
            ++free_count;
          } else {
            if (used & (1u << c)) return false;
            used |= 1u << c;
          }
        }
        if (free_count == 1) {
          for (std::int8_t c = 0; c < 3; ++c) {
            if (!(used & (1u << c))) colors[static_cast<std::size_t>(free_edge)] = c;
          }
          changed = true;
        }
      }
      if (changed) continue;
      // Degree-3 vertices: redundant with the face rule, but cheap and it
      // mirrors the hand argument.
      PartialColoring partial(colors.size());
      for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i] >= 0) partial[i] = static_cast<Color>(colors[i]);
      }
      for (VertexId v : degree3_) {
        const auto r = force_at(t_, idx_, partial, v);
        if (r.kind == ForcingResult::Kind::Contradiction) return false;
        if (r.kind == ForcingResult::Kind::Forced) {
          colors[static_cast<std::size_t>(r.edge)] = static_cast<std::int8_t>(r.color);
          partial[static_cast<std::size_t>(r.edge)] = r.color;
          changed = true;
        }
      }
    }
    return true;
  }

  int pick(const std::vector<std::int8_t>& colors) const {
    int best = -1, best_score = -1;
    for (std::size_t e = 0; e < colors.size(); ++e) {
      if (colors[e] >= 0) continue;
      if (options_.order == EdgeOrder::Sequential) return static_cast<int>(e);
      int score = 0;
      for (std::size_t f : edge_faces_[e]) {
        for (int o : idx_.face_edges(f)) score += colors[static_cast<std::size_t>(o)] >= 0;
      }
      if (score > best_score) {
        best = static_cast<int>(e);
        best_score = score;
      }
    }
    return best;
  }

  void descend(std::vector<std::int8_t>& colors, const std::function<void(const std::vector<std::int8_t>&)>& visit) {
    const int e = pick(colors);
    if (e < 0) {
      visit(colors);
      return;
    }
    for (std::int8_t c = 0; c < 3; ++c) {
      auto next = colors;
      next[static_cast<std::size_t>(e)] = c;
      if (propagate(next)) descend(next, visit);
    }
  }

  const PlaneTriangulation& t_;
  EdgeIndex idx_;
  ColoringOptions options_;
  std::vector<std::vector<std::size_t>> edge_faces_;
  std::vector<VertexId> degree3_;
};

}  // namespace

std::vector<EdgeColoring> enumerate_colorings(const PlaneTriangulation& t, const ColoringOptions& options) {
  std::vector<EdgeColoring> out;
  ColoringSearch(t, options).run([&](const std::vector<std::int8_t>& colors) {
    EdgeColoring c;
    c.reserve(colors.size());
    for (auto x : colors) c.push_back(static_cast<Color>(x));
    out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_colorings(const PlaneTriangulation& t, const ColoringOptions& options) {
  std::size_t count = 0;
  ColoringSearch(t, options).run([&](const std::vector<std::int8_t>&) { ++count; });
  return count;
}

std::vector<EdgeColoring> coloring_orbits(const PlaneTriangulation& t) {
  const EdgeIndex idx(t);
  const auto& es = idx.edges();
  // Edge permutation induced by each symmetry.
  std::vector<std::vector<int>> edge_maps;
  for (const auto& a : automorphisms(t)) {
    std::vector<int> m(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
      m[i] = idx.at(a[static_cast<std::size_t>(es[i].u)], a[static_cast<std::size_t>(es[i].v)]);
    }
    edge_maps.push_back(std::move(m));
  }
  std::set<EdgeColoring> reps;
  for (const auto& c : enumerate_colorings(t)) {
    EdgeColoring best;
    for (const auto& m : edge_maps) {
      std::array<std::uint8_t, 3> perm{0, 1, 2};
      do {
        EdgeColoring image(es.size());
        for (std::size_t i = 0; i < es.size(); ++i) {
          image[static_cast<std::size_t>(m[i])] = static_cast<Color>(perm[static_cast<std::size_t>(c[i])]);
        }
        if (best.empty() || image < best) best = std::move(image);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    reps.insert(std::move(best));
  }
  return {reps.begin(), reps.end()};
}

std::size_t count_coloring_orbits(const PlaneTriangulation& t) { return coloring_orbits(t).size(); }

std::array<std::vector<ColorComponent>, 3> ColoringClassSummary::unordered() const {
  auto triple = by_color;
  std::sort(triple.begin(), triple.end());
  return triple;
}

ColoringClassSummary class_summary(const PlaneTriangulation& t, const EdgeColoring& c) {
  if (!validate(t, c)) throw Error(ErrorCode::InvalidColoring, "some face is not rainbow");
  const auto es = edges(t);
  const auto n = static_cast<std::size_t>(t.order());
  ColoringClassSummary summary;
  for (std::uint8_t color = 0; color < 3; ++color) {
    // Union-find over the vertices touched by this colour.
    std::vector<std::size_t> parent(n);
    for (std::size_t v = 0; v < n; ++v) parent[v] = v;
    std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
      return parent[v] == v ? v : parent[v] = root(parent[v]);
    };
    std::vector<int> deg(n, 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (static_cast<std::uint8_t>(c[i]) != color) continue;
      const auto u = static_cast<std::size_t>(es[i].u), v = static_cast<std::size_t>(es[i].v);
      ++deg[u];
      ++deg[v];
      parent[root(u)] = root(v);
    }
    std::vector<int> edge_count(n, 0), vertex_count(n, 0);
    std::vector<char> all_deg2(n, 1);
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (static_cast<std::uint8_t>(c[i]) == color) ++edge_count[root(static_cast<std::size_t>(es[i].u))];
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (deg[v] == 0) continue;
      ++vertex_count[root(v)];
      if (deg[v] != 2) all_deg2[root(v)] = 0;
    }
    auto& comps = summary.by_color[color];
    for (std::size_t v = 0; v < n; ++v) {
      if (root(v) == v && edge_count[v] > 0) {
        comps.push_back({edge_count[v], all_deg2[v] && edge_count[v] == vertex_count[v]});
      }
    }
    std::sort(comps.begin(), comps.end());
  }
  return summary;
}

}  // namespace spheretri
