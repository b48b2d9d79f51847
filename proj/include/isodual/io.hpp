#pragma once

#include "isodual/dual_space.hpp"
#include "isodual/fourier.hpp"
#include "isodual/splitting.hpp"

#include <json.hpp>

#include <string>

namespace isodual
{

using Json = nlohmann::json;

//! Group-spec schema: {name, d1, d2, tol, f_elements, t_lifts: [{q}], p_reps: [{q, p, tau}]}.
Json spec_to_json(const GroupSpec& spec);
//! Throws FormatError on missing or mistyped fields.
GroupSpec spec_from_json(const Json& j);

//! "catalog:<name>" or a path to a spec file. Throws IoError or FormatError.
GroupSpec load_spec(const std::string& source);

//! Throws IoError if unreadable, FormatError if not JSON.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const Json& j);
Json to_json(const RationalVector& v);
Json to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const Json& j);
Json to_json(const std::vector<Check>& checks);

Json report_to_json(const GroupSpec& spec, const StructureReport& report,
                    const std::vector<Violation>& violations, const std::vector<long long>& moduli);
Json atlas_to_json(const Atlas& atlas);
Json certificate_to_json(const SplitCertificate& cert);

//! {group, N, shape, entries: [{n, f, p, value}]}, zero values omitted.
Json function_to_json(const PeriodicFunction& u);
//! Throws ShapeMismatch if the file belongs to another group or quotient.
PeriodicFunction function_from_json(const Json& j, const QuotientPtr& group);

//! {group, N, seed, shape, entries: [{irrep, dim, value}]}
Json table_to_json(const FourierTable& t);
FourierTable table_from_json(const Json& j, const QuotientPtr& group);

} // namespace isodual
