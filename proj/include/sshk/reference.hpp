#pragma once

#include <string>
#include <vector>

#include "sshk/report.hpp"

namespace sshk {

/// A named family with integer parameters, e.g. {"ggs", {3}} or
/// {"baumslag_solitar", {2, 3}}.
struct FamilySpec {
    std::string family;
    std::vector<long> params;
};

/// Closed-form homology / K-theory tables for the built-in families:
///   grigorchuk, grigorchuk_erschler, ggs(m), sunic_primitive(p, deg),
///   hanoi, aleshin, lamplighter(|A|), baumslag_solitar(m, n),
///   sausage(n prime).
/// Entries with no independent engine route carry the provenance
/// "closed form (reference-only)".  Parameter-domain violations raise
/// PreconditionError naming the violated hypothesis.
GradedReport closed_form(const FamilySpec& f, std::size_t max_degree);

}  // namespace sshk
