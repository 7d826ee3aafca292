#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vvlab/ideal.hpp"
#include "vvlab/resolution.hpp"

namespace vvlab {

// Graded-local model of a local ring: A = k[x_1..x_n]/J at the irrelevant
// maximal ideal m = (x_1..x_n).  J must be homogeneous for some positive
// variable weights; weights are detected from the relations.  All ideals of A
// are represented by their full preimages in k[x] (they always contain J).
class LocalRingModel {
public:
  static std::shared_ptr<const LocalRingModel> build(
      uint64_t p, const std::vector<std::string>& vars,
      const std::vector<std::string>& relations);
  static std::shared_ptr<const LocalRingModel> build_from_polys(
      RingPtr unweighted_ring, const std::vector<Polynomial>& relations);

  const RingPtr& ring() const { return ring_; }
  uint64_t p() const { return ring_->p; }
  size_t nvars() const { return ring_->nvars(); }
  const Ideal& relations() const { return relations_; }
  int dim() const { return dim_; }
  int depth() const { return depth_; }
  bool is_cohen_macaulay() const { return cm_; }

  Ideal maximal_ideal() const;
  // ideal of A: generators plus the relations baked in
  Ideal ideal_in_A(std::vector<Polynomial> gens) const;
  Polynomial reduce(const Polynomial& f) const; // normal form mod J

  // standard monomials of A (basis of A as k-space) of exact total degree d
  std::vector<Monomial> basis_monomials_of_degree(uint64_t d) const;

private:
  LocalRingModel() = default;

  RingPtr ring_;
  Ideal relations_;
  int dim_ = 0;
  int depth_ = 0;
  bool cm_ = false;
};

using ModelPtr = std::shared_ptr<const LocalRingModel>;

enum class MPrimality { Unit, MPrimary, NotMPrimary };

struct MPrimaryVerdict {
  MPrimality kind = MPrimality::NotMPrimary;
  int adic_bound = 0; // minimal N with m^N inside the ideal, when m-primary
  std::string str() const;
};

MPrimaryVerdict classify_m_primary(const ModelPtr& A, const Ideal& handle);

// Validated m-primary ideal with cached powers I^n (bounded cache; larger
// powers are computed on demand and not retained).
class MPrimaryIdeal {
public:
  static MPrimaryIdeal declare(ModelPtr A, std::vector<Polynomial> gens,
                               int power_cache_bound = 12);

  const ModelPtr& model() const { return A_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const Ideal& handle() const { return handle_; } // I + J
  uint64_t colength() const { return colength_; }
  int adic_bound() const { return adic_bound_; } // minimal N with m^N in I

  // (I^n + J); n = 0 gives the unit ideal
  Ideal power(unsigned n) const;

private:
  MPrimaryIdeal() = default;

  ModelPtr A_;
  std::vector<Polynomial> gens_;
  Ideal handle_;
  uint64_t colength_ = 0;
  int adic_bound_ = 0;
  int cache_bound_ = 12;

  struct Cache {
    std::mutex mu;
    std::map<unsigned, Ideal> powers;
  };
  std::shared_ptr<Cache> cache_;
};

} // namespace vvlab
