#include "aa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "aa/error.hpp"

namespace aa {

std::vector<Rational> enumerate_endpoints(const Params& p, unsigned depth, unsigned limit) {
  if (depth > limit) {
    throw DepthLimit("depth " + std::to_string(depth) + " exceeds limit " + std::to_string(limit));
  }
  std::vector<Rational> level{Rational(0), Rational(1)};
  for (unsigned k = 0; k < depth; ++k) {
    std::vector<Rational> next;
    next.reserve(3 * level.size());
    for (int letter = 1; letter <= 3; ++letter) {
      for (const auto& x : level) next.push_back(p.apply(letter, x));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

namespace {

mpz_class floor_div(const Rational& num, const Rational& den) {
  mpq_class q = num.mpq() / den.mpq();
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::size_t clamp_index(const mpz_class& k, std::size_t cells) {
  if (k < 0) return 0;
  if (k >= static_cast<unsigned long>(cells)) return cells - 1;
  return k.get_ui();
}

// Values are binned into cells [lo + k eps, lo + (k+1) eps); the last cell
// also takes hi. Only per-cell extremes are kept.
class CellGrid {
 public:
  CellGrid(Rational lo, Rational hi, Rational eps) : lo_(std::move(lo)), hi_(std::move(hi)), eps_(std::move(eps)) {
    const mpz_class last = floor_div(hi_ - lo_, eps_);
    cells_ = last.get_ui() + 1;
    min_.resize(cells_);
    max_.resize(cells_);
  }

  std::size_t cells() const { return cells_; }
  Rational grid(std::size_t k) const { return lo_ + Rational(static_cast<long long>(k)) * eps_; }

  std::size_t index_of(const Endpoint& v) const {
    if (v.is_rational()) return clamp_index(floor_div(v.rational() - lo_, eps_), cells_);
    const double guess = std::floor((v.approx() - lo_.approx()) / eps_.approx());
    std::size_t k = guess <= 0 ? 0 : std::min(cells_ - 1, static_cast<std::size_t>(guess));
    while (k > 0 && compare_embedding(v, grid(k)) < 0) --k;
    while (k + 1 < cells_ && compare_embedding(v, grid(k + 1)) >= 0) ++k;
    return k;
  }

  void add(const Endpoint& v) {
    const std::size_t k = index_of(v);
    if (!min_[k] || v < *min_[k]) min_[k] = v;
    if (!max_[k] || *max_[k] < v) max_[k] = v;
  }

  bool covered(const Rational& g) const {
    const Rational from = g - eps_;
    const Rational to = g + eps_;
    const std::size_t a = clamp_index(floor_div(from - lo_, eps_), cells_);
    const std::size_t b = clamp_index(floor_div(to - lo_, eps_), cells_);
    for (std::size_t k = a; k <= b; ++k) {
      if (!min_[k]) continue;
      if (compare_embedding(*max_[k], from) >= 0 && compare_embedding(*min_[k], to) <= 0) return true;
    }
    return false;
  }

  const std::optional<Endpoint>& min(std::size_t k) const { return min_[k]; }
  const std::optional<Endpoint>& max(std::size_t k) const { return max_[k]; }

 private:
  Rational lo_;
  Rational hi_;
  Rational eps_;
  std::size_t cells_ = 0;
  std::vector<std::optional<Endpoint>> min_;
  std::vector<std::optional<Endpoint>> max_;
};

// Exact for rational gaps; sqrt-sum gap widths are compared in double.
bool wider(const Interval& a, const Interval& b) {
  if (a.kind() == EndpointKind::Rational) return a.length() > b.length();
  return a.hi().approx() - a.lo().approx() > b.hi().approx() - b.lo().approx();
}

}  // namespace

DensityResult pairwise_density(BinaryOp op, const std::vector<Rational>& pts, const Interval& target,
                               const Rational& eps) {
  if (target.kind() != EndpointKind::Rational) throw InvalidInterval("density target must be rational");
  if (eps.sign() <= 0) throw Error("eps must be positive");
  const Rational& lo = target.lo().rational();
  const Rational& hi = target.hi().rational();
  const EndpointKind kind = image_kind(op);
  auto as_kind = [&](const Rational& r) -> Endpoint {
    return kind == EndpointKind::Rational ? Endpoint(r) : Endpoint(r).embedded();
  };

  CellGrid cells(lo, hi, eps);
  DensityResult out;
  const bool symmetric = is_symmetric(op);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = symmetric ? i : 0; j < pts.size(); ++j) {
      if (op == BinaryOp::Div && pts[j].is_zero()) {
        ++out.skipped_pairs;
        continue;
      }
      const Endpoint v = apply_op(op, pts[i], pts[j]);
      if (compare_embedding(v, lo) < 0 || compare_embedding(v, hi) > 0) continue;
      cells.add(v);
      ++out.values;
    }
  }

  out.dense = true;
  for (std::size_t k = 0; k < cells.cells(); ++k) {
    const Rational g = cells.grid(k);
    if (!cells.covered(g)) {
      out.dense = false;
      out.first_uncovered = g;
      break;
    }
  }
  if (out.dense && cells.grid(cells.cells() - 1) != hi && !cells.covered(hi)) {
    out.dense = false;
    out.first_uncovered = hi;
  }

  Endpoint prev = as_kind(lo);
  bool have_prev_value = false;
  auto consider = [&](const Endpoint& next) {
    if (prev < next) {
      Interval g(prev, next);
      if (!out.worst_gap || wider(g, *out.worst_gap)) out.worst_gap = g;
    }
  };
  for (std::size_t k = 0; k < cells.cells(); ++k) {
    if (!cells.min(k)) continue;
    consider(*cells.min(k));
    prev = *cells.max(k);
    have_prev_value = true;
  }
  consider(as_kind(hi));
  if (!have_prev_value) out.worst_gap = Interval(as_kind(lo), as_kind(hi));
  return out;
}

namespace {

struct LevelTree {
  std::vector<std::vector<Interval>> parts;
  // children[k][i] = [first, last) indices into parts[k+1]
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> children;
};

LevelTree build_tree(const Params& p, unsigned depth) {
  LevelTree t;
  for (const auto& u : level_covers(p, depth)) t.parts.push_back(u.parts());
  t.children.resize(depth);
  for (unsigned k = 0; k < depth; ++k) {
    const auto& up = t.parts[k];
    const auto& down = t.parts[k + 1];
    std::size_t cursor = 0;
    for (const auto& parent : up) {
      const std::size_t first = cursor;
      while (cursor < down.size() && parent.contains(down[cursor])) ++cursor;
      t.children[k].emplace_back(first, cursor);
    }
    if (cursor != down.size()) throw Error("level covers are not nested");
  }
  return t;
}

Interval clip(const Interval& box, const Interval& window) {
  return Interval(std::max(box.lo(), window.lo()), std::min(box.hi(), window.hi()));
}

}  // namespace

OuterCover outer_cover(BinaryOp op, const Params& p, unsigned depth, const std::optional<Interval>& window) {
  std::optional<Interval> win;
  if (window) {
    win = image_kind(op) == EndpointKind::SqrtSum ? window->embedded() : *window;
    if (win->kind() != image_kind(op)) throw MixedEndpointKinds("window kind does not match the image");
  }

  const LevelTree tree = build_tree(p, depth);
  IntervalAccumulator acc;
  OuterCover out;
  const bool symmetric = is_symmetric(op);

  std::function<void(unsigned, std::size_t, std::size_t)> visit = [&](unsigned k, std::size_t i, std::size_t j) {
    ++out.boxes_visited;
    const Interval& x = tree.parts[k][i];
    const Interval& y = tree.parts[k][j];
    const bool unbounded = op == BinaryOp::Div && y.lo().rational().is_zero();
    if (unbounded) {
      if (k == depth) return;
      if (win && win->hi() < Endpoint(x.lo().rational() / y.hi().rational())) return;
    } else {
      Interval box = box_image(op, x, y);
      if (win) {
        if (!box.intersects(*win)) return;
        box = clip(box, *win);
      }
      if (acc.covers(box)) return;
      if (k == depth) {
        acc.insert(box);
        return;
      }
    }
    const auto [a0, a1] = tree.children[k][i];
    const auto [b0, b1] = tree.children[k][j];
    for (std::size_t a = a0; a < a1; ++a) {
      for (std::size_t b = (symmetric && i == j) ? a : b0; b < b1; ++b) visit(k + 1, a, b);
    }
  };
  visit(0, 0, 0);

  out.cover = acc.to_union();
  if (op == BinaryOp::Div) {
    out.restriction_note = "denominator restricted to parts of level_cover(" + std::to_string(depth) +
                           ") with positive left end; the part containing 0 is dropped";
  }
  return out;
}

GapReport gap_search(BinaryOp op, const Params& p, unsigned depth, const Interval& window) {
  const Interval win = image_kind(op) == EndpointKind::SqrtSum ? window.embedded() : window;
  GapReport out;
  out.cover = outer_cover(op, p, depth, win);
  out.gaps = out.cover.cover.gaps_within(win);
  return out;
}

}  // namespace aa
