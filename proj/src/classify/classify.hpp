#pragma once

#include "classify/enumerate.hpp"
#include "classify/solvers.hpp"
#include "delta/delta_vector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deltavec {

enum class ClassifyMethod { ClosedForm, Enumeration };

struct ClassifiedSolution {
    SolutionFamily family;
    IntMatrix canonical;
    std::vector<IntMatrix> matrices;  // every normal form with these parameters
};

struct Classification {
    ClassifyMethod method = ClassifyMethod::Enumeration;
    std::vector<ClassifiedSolution> solutions;  // closed-form method only
    std::vector<IntMatrix> matrices;            // complete set, enumeration order
};

/// All normal forms of the given shape whose delta-vector is `target`.
/// D in {2, 3, 4} goes through the solution tables, anything else through
/// enumeration. Throws DetMismatch when the mass of target differs from D
/// and InvalidArgument when its dimension differs from spec.dim.
Classification classify(const HnfEnumSpec& spec, const DeltaVector& target);

/// Reference path: filter the enumeration stream by delta_from_hnf.
Classification classify_by_enumeration(const HnfEnumSpec& spec, const DeltaVector& target);

enum class Refutation { None, FailsNecessary, FailsAdditional };

std::string_view refutation_name(Refutation r);  // "none", "fails-necessary", "fails-additional"

struct RealizabilityVerdict {
    bool realizable = false;
    std::optional<IntMatrix> witness;  // normal form, checked against the target
    Refutation reason = Refutation::None;
    bool decided_by_enumeration = false;  // masses 2 and 3 below dimension 3
    std::string detail;
};

/// Decides whether some lattice polytope of dimension d has delta-vector
/// `target`, for total mass 1..4. Throws UnsupportedMass above 4 and
/// InvalidArgument on a dimension mismatch.
RealizabilityVerdict realizable(std::size_t dim, const DeltaVector& target);

}  // namespace deltavec
