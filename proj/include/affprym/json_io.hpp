#ifndef AFFPRYM_JSON_IO_HPP
#define AFFPRYM_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "affprym/cyclo.hpp"
#include "affprym/genvec.hpp"
#include "affprym/group.hpp"
#include "affprym/prym.hpp"
#include "affprym/reptheory.hpp"

namespace affprym::json_io {

using json = nlohmann::ordered_json;

// Every renderer here has a parser and parse(render(x)) == x.

json field_to_json(const gf::FieldTable& F);
struct FieldParams {
    int p = 0;
    int n = 0;
    std::vector<int> modulus;
    std::vector<int> alpha;
    bool operator==(const FieldParams&) const = default;
};
FieldParams field_params(const gf::FieldTable& F);
FieldParams field_from_json(const json& j);

json cyclo_to_json(const cyclo::CycloNumber& x);
cyclo::CycloNumber cyclo_from_json(const json& j);

json element_to_json(const group::AffGroup& G, int id);
int element_from_json(const group::AffGroup& G, const json& j);

json type_to_json(const group::SubgroupType& t);
group::SubgroupType type_from_json(const group::AffGroup& G, const json& j);

json decomposition_to_json(const reptheory::Decomposition& dec);
reptheory::Decomposition decomposition_from_json(const json& j);

json dims_to_json(const prym::ComponentDims& dims);
prym::ComponentDims dims_from_json(const json& j);

json lattice_to_json(const group::AffGroup& G);

json char_table_to_json(const group::AffGroup& G);

json witness_to_json(const group::AffGroup& G, const genvec::GeneratingVector& vec);
genvec::GeneratingVector witness_from_json(const group::AffGroup& G, const json& j);

json verdict_to_json(const group::AffGroup& G, const prym::Signature& sig,
                     const prym::Verdict& v);
prym::Verdict verdict_from_json(const group::AffGroup& G, const json& j);

} // namespace affprym::json_io

#endif
