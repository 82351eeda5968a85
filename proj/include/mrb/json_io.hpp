#pragma once

#include "mrb/complex.hpp"
#include "mrb/deformation.hpp"
#include "mrb/homotopy.hpp"

#include "json.hpp"

namespace mrb {

using Json = nlohmann::ordered_json;

// Scalars are "p/q" strings; integers are accepted on input. Malformed input throws ParseError.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// Sparse entries [i_1, ..., i_k, "p/q"], nonzeros only, in storage order.
Json sparse_to_json(const DenseTensor& t);
DenseTensor sparse_from_json(const Json& j, const Shape& shape);
// Dense row-major rows of "p/q".
Json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

Json to_json(const Algebra& A);
Algebra algebra_from_json(const Json& j);
Json to_json(const Bimodule& M);
Bimodule bimodule_from_json(const Json& j, std::size_t algebra_dim);

// Inline algebra and bimodule under "algebra" and "bimodule".
Json to_json(const OperatorFamily& F);
OperatorFamily family_from_json(const Json& j);
Json to_json(const RMatrixFamily& R);
RMatrixFamily rmatrix_from_json(const Json& j);
Json to_json(const MatchingDendriform& D);
MatchingDendriform dendriform_from_json(const Json& j);

// {arity, components: {r: {label-tuple: sparse}}}, r 1-based.
Json to_json(const OperadElement& f);
OperadElement operad_from_json(const Json& j, std::size_t dim, const LabelSet& labels);

// The base is written inline unless a reference name is given.
Json to_json(const MrrbaDeformation& d, const std::string& base_ref = {});
MrrbaDeformation deformation_from_json(const Json& j, const OperatorFamily& base);

Json to_json(const GradedSpace& V);
GradedSpace graded_space_from_json(const Json& j);
Json to_json(const GradedMultiMap& f);
GradedMultiMap graded_map_from_json(const Json& j, std::vector<GradedSpace> inputs, GradedSpace output, int degree);
Json to_json(const AInfinity& A);
AInfinity a_infinity_from_json(const Json& j);
Json to_json(const HomotopyMrrba& H);
HomotopyMrrba homotopy_mrrba_from_json(const Json& j);
Json to_json(const HomotopyMda& H);
HomotopyMda homotopy_mda_from_json(const Json& j);

Json to_json(const CertificateReport& r);
CertificateReport report_from_json(const Json& j);
Json to_json(const CohomologyReport& r);

} // namespace mrb
