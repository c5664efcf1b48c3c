#ifndef AFFPRYM_CLI_HPP
#define AFFPRYM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "affprym/group.hpp"
#include "affprym/prym.hpp"

namespace affprym::cli {

/// Dispatch a full command line (without argv[0]).
/// Exit codes: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Text renderers, shared with the golden tests. All output is
// byte-deterministic for fixed inputs.
std::string render_char_table(const group::AffGroup& G);
std::string render_rational_table(const group::AffGroup& G);
std::string render_subgroup_types(const group::AffGroup& G);
std::string render_lattice_dot(const group::AffGroup& G, bool decorated);
std::string render_verdict(const group::AffGroup& G, const prym::Signature& sig,
                           const prym::Verdict& v);

/// Builds Aff(F_q) from a bare q, factoring it as p^n.
group::AffGroup group_for_q(int q);

} // namespace affprym::cli

#endif
