#include "spheretri/canonical.hpp"

#include <algorithm>
#include <string>

namespace spheretri {

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xf]);
  }
  return s;
}

int CanonicalCode::order() const {
  return static_cast<int>(std::count(bytes_.begin(), bytes_.end(), std::uint8_t{0}));
}

namespace {

// Breadth-first coding from one root dart, compared on the fly against the
// best code so far. Returns true (and overwrites `best`) when the new code is
// strictly smaller.
class RootCoder {
 public:
  explicit RootCoder(const PlaneTriangulation& t)
      : t_(t), n_(static_cast<std::size_t>(t.order())), label_(n_), entry_(n_), queue_(n_) {}

  bool try_root(VertexId root, VertexId first, std::vector<std::uint8_t>& best) {
    std::fill(label_.begin(), label_.end(), 0);
    // 0: equal so far, -1: already smaller.
    int state = best.empty() ? -1 : 0;
    scratch_.clear();
    std::size_t head = 0, tail = 0, pos = 0;
    std::uint8_t next_label = 1;
    label_[static_cast<std::size_t>(root)] = next_label++;
    entry_[static_cast<std::size_t>(root)] = first;
    queue_[tail++] = root;

    auto emit = [&](std::uint8_t byte) {
      if (state == 0) {
        if (byte > best[pos]) return false;
        if (byte < best[pos]) state = -1;
      }
      scratch_.push_back(byte);
      ++pos;
      return true;
    };

    while (head < tail) {
      const VertexId v = queue_[head++];
      const auto ring = t_.rotation(v);
      const auto start = static_cast<std::size_t>(
          std::find(ring.begin(), ring.end(), entry_[static_cast<std::size_t>(v)]) - ring.begin());
      for (std::size_t k = 0; k < ring.size(); ++k) {
        const VertexId u = ring[(start + k) % ring.size()];
        auto& lu = label_[static_cast<std::size_t>(u)];
        if (lu == 0) {
          lu = next_label++;
          entry_[static_cast<std::size_t>(u)] = v;
          queue_[tail++] = u;
        }
        if (!emit(lu)) return false;
      }
      if (!emit(0)) return false;
    }
    if (state == 0) return false;  // identical code
    best = scratch_;
    return true;
  }

 private:
  const PlaneTriangulation& t_;
  std::size_t n_;
  std::vector<std::uint8_t> label_;
  std::vector<VertexId> entry_;
  std::vector<VertexId> queue_;
  std::vector<std::uint8_t> scratch_;
};

void minimise(const PlaneTriangulation& t, std::vector<std::uint8_t>& best) {
  RootCoder coder(t);
  for (VertexId u = 0; u < t.order(); ++u) {
    for (VertexId v : t.rotation(u)) coder.try_root(u, v, best);
  }
}

// Unoptimised coding from one root; also reports each vertex's label.
std::pair<std::vector<std::uint8_t>, std::vector<int>> code_with_labels(const PlaneTriangulation& t, VertexId root,
                                                                        VertexId first) {
  std::vector<std::uint8_t> best;
  RootCoder(t).try_root(root, first, best);
  // Labels follow from the code: vertex i of the relabelled rotation table is
  // reached along the same BFS, so replay it.
  const auto n = static_cast<std::size_t>(t.order());
  std::vector<int> label(n, 0);
  std::vector<VertexId> entry(n), queue{root};
  int next = 1;
  label[static_cast<std::size_t>(root)] = next++;
  entry[static_cast<std::size_t>(root)] = first;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    const auto ring = t.rotation(v);
    const auto start = static_cast<std::size_t>(
        std::find(ring.begin(), ring.end(), entry[static_cast<std::size_t>(v)]) - ring.begin());
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const VertexId u = ring[(start + k) % ring.size()];
      if (label[static_cast<std::size_t>(u)] == 0) {
        label[static_cast<std::size_t>(u)] = next++;
        entry[static_cast<std::size_t>(u)] = v;
        queue.push_back(u);
      }
    }
  }
  return {std::move(best), std::move(label)};
}

}  // namespace

std::vector<std::vector<VertexId>> automorphisms(const PlaneTriangulation& t, CanonicalOptions options) {
  const auto best = canonical_code(t, options);
  // Each root achieving the canonical code gives a labelling onto the same
  // canonical form; composing one with the inverse of another is a symmetry.
  std::vector<std::vector<int>> labelings;
  const auto collect = [&](const PlaneTriangulation& s) {
    for (VertexId u = 0; u < s.order(); ++u) {
      for (VertexId v : s.rotation(u)) {
        auto [code, label] = code_with_labels(s, u, v);
        if (code == best.bytes()) labelings.push_back(std::move(label));
      }
    }
  };
  collect(t);
  if (options.include_mirror) collect(mirror(t));

  const auto n = static_cast<std::size_t>(t.order());
  std::vector<VertexId> inverse(n);
  for (std::size_t v = 0; v < n; ++v) inverse[static_cast<std::size_t>(labelings.front()[v] - 1)] = static_cast<VertexId>(v);
  std::vector<std::vector<VertexId>> out;
  for (const auto& label : labelings) {
    std::vector<VertexId> map(n);
    for (std::size_t v = 0; v < n; ++v) map[v] = inverse[static_cast<std::size_t>(label[v] - 1)];
    out.push_back(std::move(map));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CanonicalCode canonical_code(const PlaneTriangulation& t, CanonicalOptions options) {
  std::vector<std::uint8_t> best;
  minimise(t, best);
  if (options.include_mirror) minimise(mirror(t), best);
  return CanonicalCode(std::move(best));
}

PlaneTriangulation decode(const CanonicalCode& code) {
  Rotation r;
  r.emplace_back();
  for (std::uint8_t b : code.bytes()) {
    if (b == 0) {
      r.emplace_back();
    } else {
      r.back().push_back(static_cast<VertexId>(b) - 1);
    }
  }
  r.pop_back();
  return PlaneTriangulation::build(std::move(r));
}

PlaneTriangulation canonical_form(const PlaneTriangulation& t, CanonicalOptions options) {
  return decode(canonical_code(t, options));
}

bool is_isomorphic(const PlaneTriangulation& a, const PlaneTriangulation& b, CanonicalOptions options) {
  if (a.order() != b.order()) return false;
  return canonical_code(a, options) == canonical_code(b, options);
}

bool degree_filter(const PlaneTriangulation& a, const PlaneTriangulation& b) {
  return degree_multiset(a) == degree_multiset(b);
}

}  // namespace spheretri
