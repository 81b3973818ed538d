#pragma once

#include <nlohmann/json.hpp>

#include "lasg/affine.hpp"
#include "lasg/ideals.hpp"
#include "lasg/laws.hpp"
#include "lasg/theorems.hpp"

namespace lasg {

// Insertion-ordered so the serialized key order is fixed.
using Json = nlohmann::ordered_json;

// Subsets and elements are written with the magma's labels.
Json set_to_json(const Magma& m, const ElemSet& a);

// {"theorem", "hypotheses_met", "conclusion_holds", "witness", "notes"};
// conclusion_holds and witness may be null.
Json to_json(const Magma& m, const VerificationReport& r);

Json to_json(const Magma& m, const LawReport& r);
Json to_json(const Magma& m, const IdealClassification& c);
Json to_json(const Magma& m, const IntraReport& r);
Json to_json(const AffineReport& r);

// {"order", "labels", "table"} with table as rows of labels.
Json magma_to_json(const Magma& m);

}  // namespace lasg
