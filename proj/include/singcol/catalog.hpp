#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singcol/invariants.hpp"
#include "singcol/newton.hpp"

namespace singcol {

enum class Series { A, D, E, J, Z, X, W, OMP, SQH, CUSPFREE, COMPOSITE };

// Named singularity type. Subscripts follow the convention that for the
// A/D/E/J/Z/X/W series the single subscript equals mu; two-index names like
// J2_0 or X1_2 are the series forms, with J10 and X9 accepted as aliases.
struct TypeName {
    Series series;
    std::vector<long> idx;

    static TypeName parse(const std::string& text);
    std::string str() const;

    bool operator==(const TypeName& o) const { return series == o.series && idx == o.idx; }
};

struct NormalForm {
    TypeName name;
    Polynomial poly;
    NewtonDiagram diagram;
};

NormalForm normal_form(const TypeName& name);
inline NormalForm normal_form(const std::string& name) { return normal_form(TypeName::parse(name)); }

// Diagram of the normal form with axis-aligned free lines moved to generic
// directions (the shape a collision limit shows when no axis is pinned to the
// free branches). Equals the plain diagram for convenient normal forms.
NewtonDiagram recognition_diagram(const TypeName& name);

struct Recognition {
    std::vector<TypeName> names; // may be empty: anonymous type
    NewtonDiagram diagram;
    InvariantRecord invariants;
};

// All catalog names whose diagram matches d up to axis swap (raw or
// generic-frame form). An empty name list is a valid answer; the descriptor
// part is always filled in.
Recognition recognize(const NewtonDiagram& d);

// The default enumeration scanned by recognize(); exposed for tests.
std::vector<TypeName> catalog_names();

} // namespace singcol
