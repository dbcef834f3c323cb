#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alcove/oracle.hpp"
#include "alcove/rng.hpp"

namespace alcove {

// One randomized instance of a presentation relation: two formal sums of
// morphism words with common endpoints that must agree as operators on the
// weight-graded polynomial/fraction module.
struct RelationInstance {
  std::string name;     // schema that produced it
  std::string display;  // instantiated data, for counterexample reports
  WordSum lhs, rhs;
};

// Relation schemas, named by what they assert:
//   poly-wall-commute       multipliers commute with wall crossings
//   translation-pairing     conjugating a linear form by a lattice
//                           translation shifts it by the pairing times h
//   wall-factorization      two crossings equal the direct crossing times the
//                           doubly-crossed wall factor
//   weyl-product            Weyl letters compose by the group law
//   wall-equivariance       conjugated crossing = crossing of moved chambers
//   poly-equivariance       conjugated multiplier = transformed polynomial
//   reflector-square        a Demazure letter squares to zero
//   reflector-braid         braid relation at a codimension-2 root crossing
//   reflector-equivariance  conjugated Demazure letter = letter of the image
//                           root wall
//   reflector-poly          sliding a polynomial past a Demazure letter
//                           leaves a divided-difference crossing term
//   reflector-wall-slide    sliding a Demazure letter around a codimension-2
//                           intersection of its root wall with matter walls
//
// Returns the schemas applicable to the given theory (root-free theories only
// support the first six).
std::vector<std::string> relation_schemas(const GaugeTheoryData& t);

// Draws one instance of the named schema.  Returns nullopt when the theory
// lacks the required structure or when no generic configuration was found
// within the internal retry budget.  Unknown schema names raise
// Error(Domain).
std::optional<RelationInstance> sample_relation(const GaugeTheoryData& t,
                                                const std::string& schema,
                                                Rng& rng);

// Samples every applicable schema `per_schema` times (skipping failed draws).
std::vector<RelationInstance> sample_relations(const GaugeTheoryData& t,
                                               int per_schema, Rng& rng);

// Oracle check of a single instance.
Verdict check_relation(const GaugeTheoryData& t, const RelationInstance& inst,
                       const OracleOpts& o = {});

}  // namespace alcove
