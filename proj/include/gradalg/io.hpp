// io.hpp — presentation files, distance-table files, and the catalogue of
// paired presentations. Files are JSON; unknown keys are rejected and parse
// errors carry a location.
#pragma once

#include <variant>

#include "gradalg/constructions.hpp"
#include "gradalg/regrade.hpp"

namespace gradalg {

struct ConstructDirective {
    enum class Kind { trivext, exterior, pgroup, pgroup_semidirect };
    Kind kind = Kind::trivext;
    std::optional<QuiverPresentation> base;  // trivext
    std::size_t n = 0;                       // exterior
    std::optional<GroupRep> group;           // exterior group / semidirect action
    PGroupSpec pgroup;
    FieldDesc field;
};

struct PresentationInput {
    FieldDesc field;
    std::variant<QuiverPresentation, ConstructDirective> content;

    bool is_presentation() const { return std::holds_alternative<QuiverPresentation>(content); }
};

PresentationInput parse_presentation_text(const std::string& text, std::optional<FieldDesc> field_override);
PresentationInput parse_presentation_file(const std::string& path, std::optional<FieldDesc> field_override);

DistanceTable parse_distance_table_file(const std::string& path);

struct CataloguePair {
    std::string id;
    PresentationInput left, right;
};

std::vector<CataloguePair> parse_pairs_file(const std::string& path, std::optional<FieldDesc> field_override);

// Realize an input as a concrete graded algebra (plus construction extras).
struct BuiltAlgebra {
    AlgebraRep algebra;
    Grading grading;
    std::optional<SymmetrizingForm> form;       // canonical form, when the construction has one
    std::optional<NakayamaData> nakayama_data;  // construction-provided, when available
    std::string description;
};

BuiltAlgebra realize(const PresentationInput& in);

FieldDesc parse_field_name(const std::string& name);

}  // namespace gradalg
