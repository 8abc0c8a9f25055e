#pragma once

// Finitely generated graded R-modules, given as cokernels of homogeneous
// maps F1 -> F0, with cached minimal presentation and minimal resolution.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rescat/matrix.hpp"
#include "rescat/ring.hpp"

namespace rescat {

struct Resolution {
  std::vector<FreeModule> F;  // F_0 .. F_L
  std::vector<Matrix> d;      // d[i] : F_{i+1} -> F_i
  bool terminated = false;    // true when ker d_L = 0 was verified

  // L, or -1 for the zero module.
  int length() const;
  bool minimal() const;
  std::vector<std::size_t> betti() const;
};

class Module;

struct MinimalPresentation {
  Matrix pres;                     // F1min -> F0min, entries in m
  Matrix to_min;                   // F0 -> F0min: images of the old generators
  std::vector<std::size_t> kept;   // new generator k is old generator kept[k]
};

class Module {
 public:
  Module(GradedRingPtr R, Matrix presentation);

  static Module free(GradedRingPtr R, FreeModule F);
  static Module zero(GradedRingPtr R);
  // (R/J)(-shift), i.e. generated in degree `shift`.
  static Module cyclic(GradedRingPtr R, const std::vector<Poly>& ideal_gens, int shift = 0);
  // A presentation known to be minimal, optionally with its resolution
  // starting at d_1 = presentation.
  static Module from_minimal(GradedRingPtr R, Matrix presentation);
  static Module from_resolution(GradedRingPtr R, Resolution res);

  const GradedRing& ring() const { return *R_; }
  const GradedRingPtr& ring_ptr() const { return R_; }
  const Matrix& presentation() const { return pres_; }
  const FreeModule& generators() const { return pres_.tgt(); }

  const MinimalPresentation& minimal() const;
  Module minimized() const;
  bool is_zero() const { return minimal().pres.rows() == 0; }
  bool is_free() const { return minimal().pres.cols() == 0; }
  std::size_t num_generators() const { return minimal().pres.rows(); }

  // Minimal free resolution with at least `steps` maps (fewer when it
  // terminates earlier).
  Resolution resolution(int steps) const;

 private:
  struct Cache {
    std::recursive_mutex mu;
    std::unique_ptr<MinimalPresentation> minimal;
    Resolution res;
    bool res_started = false;
    bool is_minimal = false;
  };

  GradedRingPtr R_;
  Matrix pres_;
  std::shared_ptr<Cache> cache_;
};

MinimalPresentation prune_presentation(const Matrix& A, const GradedRing& R);

Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& ms);
// Every generator and relation degree raised by `shift`.
Module shift_degrees(const Module& M, int shift);

// Generators Z of a submodule of G, modulo the submodule generated by B
// (both given as columns into the same free module): presentation of
// (Z + B)/B on the columns of Z.
Module subquotient(const Matrix& Z, const Matrix& B, const GradedRingPtr& R);

std::string format_betti(const Resolution& res);
std::string format_module(const Module& M);

}  // namespace rescat
