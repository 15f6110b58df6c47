#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "gmd/monomial_ideal.hpp"
#include "gmd/polynomial.hpp"

namespace gmd {

template <class F>
std::vector<Polynomial<F>> reduced_groebner(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens);

// Graded ideal given by generators. The reduced Groebner basis and the
// initial ideal are computed on demand and cached; the cache is shared by
// copies and synchronized, so a precomputed Ideal is safe to read from
// several threads.
template <class F>
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
      : ring_(std::move(ring)), box_(std::make_shared<Box>()) {
    for (auto& g : gens)
      if (!g.is_zero()) gens_.push_back(std::move(g));
    homogeneous_ = true;
    for (const auto& g : gens_) homogeneous_ = homogeneous_ && g.is_homogeneous();
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool homogeneous() const { return homogeneous_; }

  const std::vector<Polynomial<F>>& groebner() const {
    std::lock_guard<std::mutex> lock(box_->mu);
    if (!box_->gb)
      box_->gb = std::make_shared<const std::vector<Polynomial<F>>>(reduced_groebner(ring_, gens_));
    return *box_->gb;
  }

  const MonomialIdeal& initial_ideal() const {
    const auto& gb = groebner();
    std::lock_guard<std::mutex> lock(box_->mu);
    if (!box_->init) {
      std::vector<Monomial> lms;
      lms.reserve(gb.size());
      for (const auto& g : gb) lms.push_back(g.leading_monomial());
      box_->init = std::make_shared<const MonomialIdeal>(ring_->nvars(), std::move(lms));
    }
    return *box_->init;
  }

 private:
  struct Box {
    std::mutex mu;
    std::shared_ptr<const std::vector<Polynomial<F>>> gb;
    std::shared_ptr<const MonomialIdeal> init;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  bool homogeneous_ = true;
  std::shared_ptr<Box> box_;
};

using IdealFp = Ideal<PrimeField>;
using IdealQ = Ideal<RationalField>;

}  // namespace gmd
