#pragma once

// Line-oriented text formats for rings, modules, chains, descriptors and
// prime catalogs. Parse failures throw InputError naming source and line.
//
//   ring:       char 101 / vars x:1 y:1 / rels x*y; y^3
//   module:     gens 0 0 / rel x; y  (one entry per generator, ';'-separated)
//   chain:      level 1: V(x; y)   (∅ or V(1) for an empty level)
//   descriptor: fin-pd: | dominant: | hyper: W=V(...) followed by chain
//               lines, or generated: followed by module file paths
//   catalog:    prime (x; y)  or  prime (0)
//
// '#' starts a comment; blank lines are ignored.

#include <string>
#include <string_view>

#include "rescat/classification.hpp"

namespace rescat {

GradedRingPtr parse_ring(std::string_view text, const std::string& source = "<ring>");
Module parse_module(std::string_view text, const GradedRingPtr& R, const std::string& source = "<module>");
ClosedSet parse_closed_set(std::string_view text, const GradedRingPtr& R);
Chain parse_chain(std::string_view text, const GradedRingPtr& R, const std::string& source = "<chain>");
// Relative module paths in a generated descriptor resolve against base_dir.
Descriptor parse_descriptor(std::string_view text, const GradedRingPtr& R, const std::string& source = "<descriptor>",
                            const std::string& base_dir = ".");
PrimeCatalog parse_catalog(std::string_view text, const GradedRingPtr& R, const std::string& source = "<catalog>");

std::string read_file(const std::string& path);
GradedRingPtr load_ring(const std::string& path);
Module load_module(const std::string& path, const GradedRingPtr& R);
Chain load_chain(const std::string& path, const GradedRingPtr& R);
Descriptor load_descriptor(const std::string& path, const GradedRingPtr& R);
PrimeCatalog load_catalog(const std::string& path, const GradedRingPtr& R);

std::string format_ring(const GradedRing& R);
std::string format_descriptor(const Descriptor& D);

}  // namespace rescat
