#pragma once

// Exact sequences of graded modules with explicit maps, and the sequence
// constructions used by the classification layer.
//
// A map between modules is a matrix from the generators of the source
// presentation to the generators of the target presentation.

#include <string>
#include <vector>

#include "rescat/homological.hpp"

namespace rescat {

// 0 -> terms[0] -> terms[1] -> ... -> terms.back() -> 0
struct ExactSequence {
  std::vector<Module> terms;
  std::vector<Matrix> maps;  // maps[i] : terms[i] -> terms[i+1]
};

struct SequenceCheck {
  bool ok = true;
  std::string failure;  // first failed condition, empty when ok
};

SequenceCheck verify_exact(const ExactSequence& s);
// Alternating sum of Hilbert series of the terms vanishes.
bool hilbert_additive(const ExactSequence& s);

// Generators of the kernel of a module map, as columns in the source
// generators.
Matrix map_kernel(const Matrix& f, const Module& src, const Module& tgt);
// Image of a module map as a submodule of the target.
Module map_image(const Matrix& f, const Module& tgt);

// 0 -> Ext^1(M,R) -> Tr M -> (Ω²M)^* -> Ext^2(M,R) -> 0
struct Prop15 {
  ExactSequence seq;
  Module image;             // image of the middle map
  Module omega_tr_omega;    // Ω Tr Ω M
  bool image_matches = false;  // image ≅ Ω Tr Ω M up to free summands
};
Prop15 prop1_5_sequence(const Module& M);

// 0 -> F -> C -> X -> 0 with C maximal Cohen-Macaulay and pd F finite.
struct McmApproximation {
  int n = 0;  // least n with Ω^n X maximal Cohen-Macaulay
  ExactSequence seq;
};
McmApproximation mcm_approximation(const Module& X);

// 0 -> X -> L -> Ω^{-1}C -> 0 obtained by pushing the approximation along
// C -> free, with pd L finite and Ω^{-1}C maximal Cohen-Macaulay.
struct LciSplit {
  Module pd_part;
  Module mcm_part;
  McmApproximation approx;
  ExactSequence pushout;    // 0 -> X -> L -> Ω^{-1}C -> 0
  ExactSequence free_side;  // 0 -> F -> Q -> L -> 0
};
LciSplit lci_split(const Module& M);

// Stacks two maps with a common source.
Matrix stack_rows(const Matrix& top, const Matrix& bottom);

}  // namespace rescat
