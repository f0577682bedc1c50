#pragma once

#include "msb/field.hpp"
#include "msb/grade.hpp"

#include <optional>
#include <vector>

namespace msb::detail {

using Vec = std::vector<FieldElem>;

/// Incremental row-echelon basis of a subspace of k^length. Each stored vector
/// has a distinct pivot (its last nonzero index, normalised to 1) and may carry
/// a tracking vector recording it as a combination of caller-chosen sources.
///
/// Invariant for reduce(): v_out = v_in + sum_s track_out[s] * source_s, given
/// track_in = 0; with track_in = e_j and v_in = source_j this gives
/// v_out = sum_s track_out[s] * source_s.
class Echelon {
 public:
  Echelon(const PrimeField& field, Index length, Index tracked = 0)
      : field_(field), length_(length), tracked_(tracked), pivots_(static_cast<std::size_t>(length)) {}

  void reduce(Vec& v, Vec* track = nullptr) const {
    for (Index i = length_ - 1; i >= 0; --i) {
      const FieldElem c = v[static_cast<std::size_t>(i)];
      const auto& slot = pivots_[static_cast<std::size_t>(i)];
      if (c == 0 || !slot) continue;
      axpy(v, field_.neg(c), slot->v, i + 1);
      if (track) axpy(*track, field_.neg(c), slot->t, tracked_);
    }
  }

  /// Reduces and stores v if it is independent of the current span.
  bool insert(Vec v, Vec track = {}) {
    if (tracked_ > 0 && track.empty()) track.assign(static_cast<std::size_t>(tracked_), 0);
    reduce(v, tracked_ > 0 ? &track : nullptr);
    const Index p = pivot(v);
    if (p < 0) return false;
    const FieldElem s = field_.inv(v[static_cast<std::size_t>(p)]);
    scale(v, s);
    if (tracked_ > 0) scale(track, s);
    pivots_[static_cast<std::size_t>(p)] = Stored{std::move(v), std::move(track)};
    ++rank_;
    return true;
  }

  Index rank() const { return rank_; }

  static Index pivot(const Vec& v) {
    for (Index i = static_cast<Index>(v.size()) - 1; i >= 0; --i)
      if (v[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
  }

  static bool is_zero(const Vec& v) { return pivot(v) < 0; }

 private:
  struct Stored {
    Vec v;
    Vec t;
  };

  void axpy(Vec& y, FieldElem a, const Vec& x, Index upto) const {
    for (Index k = 0; k < upto; ++k) {
      const FieldElem xk = x[static_cast<std::size_t>(k)];
      if (xk != 0) y[static_cast<std::size_t>(k)] = field_.add(y[static_cast<std::size_t>(k)], field_.mul(a, xk));
    }
  }

  void scale(Vec& v, FieldElem s) const {
    for (auto& x : v) x = field_.mul(x, s);
  }

  PrimeField field_;
  Index length_;
  Index tracked_;
  Index rank_ = 0;
  std::vector<std::optional<Stored>> pivots_;
};

}  // namespace msb::detail
