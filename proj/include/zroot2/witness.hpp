#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zroot2/ring.hpp"
#include "zroot2/rng.hpp"
#include "zroot2/seqgroup.hpp"

namespace zroot2 {

// Formal direct-sum expression over the atoms
//   Seq     - a copy of the sequence group A over Z[2^(1/n)],
//   Ring    - one copy of Z[2^(1/n)] (appears between a shift and a split),
//   Free(r) - a copy of Z^r, r >= 1,
// with binary pairing. Shapes are deliberately unnormalized trees; witnesses
// carry explicit reassociation moves instead.
class Shape {
 public:
  enum class Kind { Seq, Ring, Free, Pair };

  static Shape seq(RingParams params) { return Shape(Kind::Seq, params.degree, nullptr, nullptr); }
  static Shape ring(RingParams params) { return Shape(Kind::Ring, params.degree, nullptr, nullptr); }
  static Shape free(int rank) {
    if (rank < 1) throw std::invalid_argument("Shape: free rank must be >= 1");
    return Shape(Kind::Free, rank, nullptr, nullptr);
  }
  static Shape pair(Shape left, Shape right) {
    return Shape(Kind::Pair, 0, std::make_shared<Shape>(std::move(left)),
                 std::make_shared<Shape>(std::move(right)));
  }

  Kind kind() const { return kind_; }
  int degree() const { return param_; }  // Seq / Ring
  int rank() const { return param_; }    // Free
  const Shape& left() const { return *left_; }
  const Shape& right() const { return *right_; }

  friend bool operator==(const Shape& a, const Shape& b) {
    if (a.kind_ != b.kind_ || a.param_ != b.param_) return false;
    if (a.kind_ != Kind::Pair) return true;
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::Seq:
        return "A";
      case Kind::Ring:
        return "R";
      case Kind::Free:
        return param_ == 1 ? "Z" : "Z^" + std::to_string(param_);
      case Kind::Pair:
        return "(" + left_->str() + " + " + right_->str() + ")";
    }
    return "?";
  }

 private:
  Shape(Kind kind, int param, std::shared_ptr<const Shape> l, std::shared_ptr<const Shape> r)
      : kind_(kind), param_(param), left_(std::move(l)), right_(std::move(r)) {}

  Kind kind_;
  int param_;
  std::shared_ptr<const Shape> left_, right_;
};

// Element of a shaped direct sum: the tree mirrors its Shape.
class Element {
 public:
  static Element seq(FinSeq s) {
    Element e(Shape::Kind::Seq);
    e.seq_ = std::move(s);
    return e;
  }
  static Element ring(RingElem r) {
    Element e(Shape::Kind::Ring);
    e.ring_ = std::move(r);
    return e;
  }
  static Element free(std::vector<Int> v) {
    if (v.empty()) throw std::invalid_argument("Element: free part must have rank >= 1");
    Element e(Shape::Kind::Free);
    e.free_ = std::move(v);
    return e;
  }
  static Element pair(Element left, Element right) {
    Element e(Shape::Kind::Pair);
    e.children_.reserve(2);
    e.children_.push_back(std::move(left));
    e.children_.push_back(std::move(right));
    return e;
  }

  Shape::Kind kind() const { return kind_; }
  const FinSeq& as_seq() const { return require(Shape::Kind::Seq), *seq_; }
  const RingElem& as_ring() const { return require(Shape::Kind::Ring), *ring_; }
  const std::vector<Int>& as_free() const { return require(Shape::Kind::Free), free_; }
  const Element& left() const { return require(Shape::Kind::Pair), children_[0]; }
  const Element& right() const { return require(Shape::Kind::Pair), children_[1]; }

  Shape shape() const {
    switch (kind_) {
      case Shape::Kind::Seq:
        return Shape::seq(seq_->params());
      case Shape::Kind::Ring:
        return Shape::ring(ring_->params());
      case Shape::Kind::Free:
        return Shape::free(static_cast<int>(free_.size()));
      case Shape::Kind::Pair:
        return Shape::pair(children_[0].shape(), children_[1].shape());
    }
    throw std::logic_error("Element: bad kind");
  }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Shape::Kind::Seq:
        return *a.seq_ == *b.seq_;
      case Shape::Kind::Ring:
        return *a.ring_ == *b.ring_;
      case Shape::Kind::Free:
        return a.free_ == b.free_;
      case Shape::Kind::Pair:
        return a.children_ == b.children_;
    }
    return false;
  }

  // Componentwise group addition; shapes must agree.
  friend Element operator+(const Element& a, const Element& b) {
    if (a.kind_ != b.kind_) throw std::invalid_argument("element add: shape mismatch");
    switch (a.kind_) {
      case Shape::Kind::Seq:
        return Element::seq(*a.seq_ + *b.seq_);
      case Shape::Kind::Ring:
        return Element::ring(*a.ring_ + *b.ring_);
      case Shape::Kind::Free: {
        if (a.free_.size() != b.free_.size()) throw std::invalid_argument("element add: rank mismatch");
        std::vector<Int> v(a.free_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.free_[i];
        return Element::free(std::move(v));
      }
      case Shape::Kind::Pair:
        return Element::pair(a.children_[0] + b.children_[0], a.children_[1] + b.children_[1]);
    }
    throw std::logic_error("element add: bad kind");
  }

 private:
  explicit Element(Shape::Kind k) : kind_(k) {}

  void require(Shape::Kind k) const {
    if (kind_ != k) throw std::logic_error("Element: accessed wrong alternative");
  }

  Shape::Kind kind_;
  std::optional<FinSeq> seq_;
  std::optional<RingElem> ring_;
  std::vector<Int> free_;
  std::vector<Element> children_;
};

// One primitive invertible move, applied at a subtree addressed by `path`
// (0 = left child, 1 = right child). Forward readings:
//   Shift:      A + R -> A            (a, b) |-> (b, a0, a1, ...)
//   Interleave: A + A -> A            (a, b) |-> (a0, b0, a1, b1, ...)
//   Split:      R -> Z^n              c0 + c1*2^(1/n) + ... |-> (c0, ..., c_{n-1})
//   MergeFree:  Z^r + Z^s -> Z^(r+s)  concatenation (split_at = r)
//   Swap:       X + Y -> Y + X
//   Assoc:      X + (Y + Z) -> (X + Y) + Z
struct Move {
  enum class Prim { Shift, Interleave, Split, MergeFree, Swap, Assoc };

  Prim prim;
  bool inverse = false;
  std::vector<int> path;
  int split_at = 0;  // MergeFree only: rank of the left summand

  Move inverted() const {
    Move m = *this;
    m.inverse = !m.inverse;
    return m;
  }

  std::string description() const {
    std::string what;
    switch (prim) {
      case Prim::Shift:
        what = inverse ? "unshift: A -> A + R, a |-> ((a1, a2, ...), a0)"
                       : "shift: A + R -> A, (a, b) |-> (b, a0, a1, ...)";
        break;
      case Prim::Interleave:
        what = inverse ? "deinterleave: A -> A + A, evens and odds"
                       : "interleave: A + A -> A, (a, b) |-> (a0, b0, a1, b1, ...)";
        break;
      case Prim::Split:
        what = inverse ? "pack: Z^n -> R, (c0, ..., c_{n-1}) |-> sum c_i 2^(i/n)"
                       : "split: R -> Z^n, power-basis coordinates";
        break;
      case Prim::MergeFree:
        what = inverse ? "split free: Z^(r+s) -> Z^r + Z^s at r = " + std::to_string(split_at)
                       : "merge free: Z^r + Z^s -> Z^(r+s), r = " + std::to_string(split_at);
        break;
      case Prim::Swap:
        what = "swap: X + Y -> Y + X";
        break;
      case Prim::Assoc:
        what = inverse ? "reassociate: (X + Y) + Z -> X + (Y + Z)"
                       : "reassociate: X + (Y + Z) -> (X + Y) + Z";
        break;
    }
    std::string where = "[";
    for (std::size_t i = 0; i < path.size(); ++i) where += (i ? "." : "") + std::to_string(path[i]);
    where += "]";
    return what + " at " + where;
  }
};

namespace detail {

[[noreturn]] inline void move_mismatch(const Move& m, const Shape& s) {
  throw std::invalid_argument("move '" + m.description() + "' does not apply to shape " + s.str());
}

inline Shape shape_after_prim(const Move& m, const Shape& s) {
  using K = Shape::Kind;
  switch (m.prim) {
    case Move::Prim::Shift:
      if (!m.inverse) {
        if (s.kind() == K::Pair && s.left().kind() == K::Seq && s.right().kind() == K::Ring &&
            s.left().degree() == s.right().degree())
          return Shape::seq(RingParams(s.left().degree()));
      } else if (s.kind() == K::Seq) {
        RingParams p(s.degree());
        return Shape::pair(Shape::seq(p), Shape::ring(p));
      }
      break;
    case Move::Prim::Interleave:
      if (!m.inverse) {
        if (s.kind() == K::Pair && s.left().kind() == K::Seq && s.right().kind() == K::Seq &&
            s.left().degree() == s.right().degree())
          return Shape::seq(RingParams(s.left().degree()));
      } else if (s.kind() == K::Seq) {
        RingParams p(s.degree());
        return Shape::pair(Shape::seq(p), Shape::seq(p));
      }
      break;
    case Move::Prim::Split:
      if (!m.inverse) {
        if (s.kind() == K::Ring) return Shape::free(s.degree());
      } else if (s.kind() == K::Free && s.rank() >= 2) {
        return Shape::ring(RingParams(s.rank()));
      }
      break;
    case Move::Prim::MergeFree:
      if (!m.inverse) {
        if (s.kind() == K::Pair && s.left().kind() == K::Free && s.right().kind() == K::Free &&
            s.left().rank() == m.split_at)
          return Shape::free(s.left().rank() + s.right().rank());
      } else if (s.kind() == K::Free && m.split_at >= 1 && m.split_at < s.rank()) {
        return Shape::pair(Shape::free(m.split_at), Shape::free(s.rank() - m.split_at));
      }
      break;
    case Move::Prim::Swap:
      if (s.kind() == K::Pair) return Shape::pair(s.right(), s.left());
      break;
    case Move::Prim::Assoc:
      if (!m.inverse) {
        if (s.kind() == K::Pair && s.right().kind() == K::Pair)
          return Shape::pair(Shape::pair(s.left(), s.right().left()), s.right().right());
      } else {
        if (s.kind() == K::Pair && s.left().kind() == K::Pair)
          return Shape::pair(s.left().left(), Shape::pair(s.left().right(), s.right()));
      }
      break;
  }
  move_mismatch(m, s);
}

inline Element apply_prim(const Move& m, const Element& e) {
  switch (m.prim) {
    case Move::Prim::Shift:
      if (!m.inverse) {
        return Element::seq(shift_embed(e.right().as_ring(), e.left().as_seq()));
      } else {
        auto [head, tail] = shift_extract(e.as_seq());
        return Element::pair(Element::seq(std::move(tail)), Element::ring(std::move(head)));
      }
    case Move::Prim::Interleave:
      if (!m.inverse) {
        return Element::seq(interleave(e.left().as_seq(), e.right().as_seq()));
      } else {
        auto [evens, odds] = deinterleave(e.as_seq());
        return Element::pair(Element::seq(std::move(evens)), Element::seq(std::move(odds)));
      }
    case Move::Prim::Split:
      if (!m.inverse) {
        return Element::free(e.as_ring().coeffs());
      } else {
        return Element::ring(RingElem(RingParams(static_cast<int>(e.as_free().size())), e.as_free()));
      }
    case Move::Prim::MergeFree:
      if (!m.inverse) {
        std::vector<Int> v(e.left().as_free());
        for (const Int& c : e.right().as_free()) v.push_back(c);
        return Element::free(std::move(v));
      } else {
        const auto& v = e.as_free();
        std::vector<Int> l(v.begin(), v.begin() + m.split_at);
        std::vector<Int> r(v.begin() + m.split_at, v.end());
        return Element::pair(Element::free(std::move(l)), Element::free(std::move(r)));
      }
    case Move::Prim::Swap:
      return Element::pair(e.right(), e.left());
    case Move::Prim::Assoc:
      if (!m.inverse) {
        // X + (Y + Z) -> (X + Y) + Z
        return Element::pair(Element::pair(e.left(), e.right().left()), e.right().right());
      } else {
        return Element::pair(e.left().left(), Element::pair(e.left().right(), e.right()));
      }
  }
  throw std::logic_error("apply_prim: bad primitive");
}

inline Shape shape_rebuild(const Shape& s, const std::vector<int>& path, std::size_t from,
                           const Shape& replacement) {
  if (from == path.size()) return replacement;
  if (s.kind() != Shape::Kind::Pair)
    throw std::invalid_argument("move path descends into a non-pair shape " + s.str());
  if (path[from] == 0)
    return Shape::pair(shape_rebuild(s.left(), path, from + 1, replacement), s.right());
  return Shape::pair(s.left(), shape_rebuild(s.right(), path, from + 1, replacement));
}

inline const Shape& shape_subtree(const Shape& s, const std::vector<int>& path) {
  const Shape* cur = &s;
  for (int step : path) {
    if (cur->kind() != Shape::Kind::Pair)
      throw std::invalid_argument("move path descends into a non-pair shape " + cur->str());
    cur = step == 0 ? &cur->left() : &cur->right();
  }
  return *cur;
}

inline Element element_rebuild(const Element& e, const std::vector<int>& path, std::size_t from,
                               const Move& m) {
  if (from == path.size()) return apply_prim(m, e);
  if (e.kind() != Shape::Kind::Pair) throw std::invalid_argument("move path descends into a non-pair element");
  if (path[from] == 0) return Element::pair(element_rebuild(e.left(), path, from + 1, m), e.right());
  return Element::pair(e.left(), element_rebuild(e.right(), path, from + 1, m));
}

}  // namespace detail

inline Shape shape_after_move(const Shape& s, const Move& m) {
  const Shape& sub = detail::shape_subtree(s, m.path);
  return detail::shape_rebuild(s, m.path, 0, detail::shape_after_prim(m, sub));
}

inline Element apply_move(const Element& e, const Move& m) {
  return detail::element_rebuild(e, m.path, 0, m);
}

// Composable, formally invertible transformation between shaped direct sums.
// The target shape is recomputed from the move list on construction, so a
// witness that type-checks is valid by construction; apply() additionally
// validates the element against the source shape.
class IsoWitness {
 public:
  static IsoWitness identity(RingParams params, Shape shape) { return IsoWitness(params, std::move(shape)); }

  RingParams params() const { return params_; }
  const Shape& source() const { return source_; }
  const Shape& target() const { return target_; }
  const std::vector<Move>& moves() const { return moves_; }

  IsoWitness& append(Move m) {
    target_ = shape_after_move(target_, m);
    moves_.push_back(std::move(m));
    return *this;
  }

  // Diagrammatic composition: this witness first, then `next`.
  IsoWitness then(const IsoWitness& next) const {
    if (!(target_ == next.source_))
      throw std::invalid_argument("witness composition: target " + target_.str() +
                                  " does not match source " + next.source_.str());
    IsoWitness out = *this;
    for (const Move& m : next.moves_) out.append(m);
    return out;
  }

  IsoWitness inverted() const {
    IsoWitness out(params_, target_);
    for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) out.append(it->inverted());
    return out;
  }

  Element apply(const Element& e) const {
    if (!(e.shape() == source_))
      throw std::invalid_argument("witness application: element shape " + e.shape().str() +
                                  " does not match source " + source_.str());
    Element cur = e;
    for (const Move& m : moves_) cur = apply_move(cur, m);
    return cur;
  }

  std::vector<std::string> transcript() const {
    std::vector<std::string> lines;
    lines.reserve(moves_.size());
    Shape cur = source_;
    for (const Move& m : moves_) {
      Shape next = shape_after_move(cur, m);
      lines.push_back(m.description() + ": " + cur.str() + " -> " + next.str());
      cur = next;
    }
    return lines;
  }

 private:
  IsoWitness(RingParams params, Shape shape) : params_(params), source_(shape), target_(std::move(shape)) {}

  RingParams params_;
  Shape source_;
  Shape target_;
  std::vector<Move> moves_;
};

inline IsoWitness compose(const IsoWitness& first, const IsoWitness& second) { return first.then(second); }

// A + R -> A.
inline IsoWitness shift_witness(RingParams params) {
  IsoWitness w = IsoWitness::identity(params, Shape::pair(Shape::seq(params), Shape::ring(params)));
  w.append({Move::Prim::Shift, false, {}, 0});
  return w;
}

// A + A -> A.
inline IsoWitness interleave_witness(RingParams params) {
  IsoWitness w = IsoWitness::identity(params, Shape::pair(Shape::seq(params), Shape::seq(params)));
  w.append({Move::Prim::Interleave, false, {}, 0});
  return w;
}

// R -> Z^n in the power basis.
inline IsoWitness split_witness(RingParams params) {
  IsoWitness w = IsoWitness::identity(params, Shape::ring(params));
  w.append({Move::Prim::Split, false, {}, 0});
  return w;
}

// A + Z^n -> A: pack the free coordinates into a ring element, then shift it
// in. The inverse direction is the constructive content of A ~ A + Z^n.
inline IsoWitness absorb_free_witness(RingParams params) {
  IsoWitness w = IsoWitness::identity(
      params, Shape::pair(Shape::seq(params), Shape::free(params.degree)));
  w.append({Move::Prim::Split, true, {1}, 0});
  w.append({Move::Prim::Shift, false, {}, 0});
  return w;
}

struct CornerWitness {
  IsoWitness witness;
  std::vector<std::string> transcript;
};

// Witness chain for the direct sum of n+1 copies of B = A + Z, reduced to
// the canonical form A + Z^((n+1) mod d) at ring degree d. When d divides n
// the result is B itself (the d-fold-sum phenomenon: B is isomorphic to the
// direct sum of d+1 copies of itself); when d divides n+1 the result is A.
inline CornerWitness corner_witness(long n, RingParams params) {
  if (n < 1) throw std::invalid_argument("corner_witness: n must be >= 1");
  const int d = params.degree;
  const Shape b = Shape::pair(Shape::seq(params), Shape::free(1));

  Shape source = b;
  for (long i = 0; i < n; ++i) source = Shape::pair(b, source);

  IsoWitness w = IsoWitness::identity(params, source);
  auto at = [](std::vector<int> base, std::initializer_list<int> tail) {
    for (int t : tail) base.push_back(t);
    return base;
  };

  // Fold from the innermost pair outwards: each round turns
  // (A + Z) + (A + Z^m) into A + Z^(m+1).
  for (long depth = n - 1; depth >= 0; --depth) {
    std::vector<int> q(static_cast<std::size_t>(depth), 1);
    w.append({Move::Prim::Assoc, false, q, 0});
    w.append({Move::Prim::Assoc, true, at(q, {0}), 0});
    w.append({Move::Prim::Swap, false, at(q, {0, 1}), 0});
    w.append({Move::Prim::Assoc, false, at(q, {0}), 0});
    w.append({Move::Prim::Interleave, false, at(q, {0, 0}), 0});
    w.append({Move::Prim::Assoc, true, q, 0});
    w.append({Move::Prim::MergeFree, false, at(q, {1}), 1});
  }

  // Absorb d free coordinates at a time through pack + shift.
  long f = n + 1;
  while (f > d) {
    w.append({Move::Prim::MergeFree, true, {1}, d});
    w.append({Move::Prim::Assoc, false, {}, 0});
    w.append({Move::Prim::Split, true, {0, 1}, 0});
    w.append({Move::Prim::Shift, false, {0}, 0});
    f -= d;
  }
  if (f == d) {
    w.append({Move::Prim::Split, true, {1}, 0});
    w.append({Move::Prim::Shift, false, {}, 0});
  }

  std::vector<std::string> transcript = w.transcript();
  return {std::move(w), std::move(transcript)};
}

// Witness lookup by name; corner takes the copies parameter n.
inline IsoWitness build_witness(const std::string& kind, long n, RingParams params) {
  if (kind == "shift") return shift_witness(params);
  if (kind == "interleave") return interleave_witness(params);
  if (kind == "split") return split_witness(params);
  if (kind == "absorb") return absorb_free_witness(params);
  if (kind == "corner") return corner_witness(n, params).witness;
  throw std::invalid_argument("unknown witness '" + kind +
                              "' (expected shift|interleave|split|absorb|corner)");
}

inline Element random_element(const Shape& s, std::size_t max_support, long coeff_bound, Rng& rng) {
  switch (s.kind()) {
    case Shape::Kind::Seq:
      return Element::seq(random_finseq(RingParams(s.degree()), max_support, coeff_bound, rng));
    case Shape::Kind::Ring:
      return Element::ring(random_ring_elem(RingParams(s.degree()), coeff_bound, rng));
    case Shape::Kind::Free: {
      std::vector<Int> v(s.rank());
      for (Int& c : v) c = rng.uniform(-coeff_bound, coeff_bound);
      return Element::free(std::move(v));
    }
    case Shape::Kind::Pair:
      return Element::pair(random_element(s.left(), max_support, coeff_bound, rng),
                           random_element(s.right(), max_support, coeff_bound, rng));
  }
  throw std::logic_error("random_element: bad shape");
}

}  // namespace zroot2
