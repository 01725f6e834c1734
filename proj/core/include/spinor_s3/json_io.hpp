#pragma once

#include <nlohmann/json.hpp>

#include "spinor_s3/abstract_dirac.hpp"
#include "spinor_s3/exactnum.hpp"
#include "spinor_s3/integration.hpp"
#include "spinor_s3/polyring.hpp"
#include "spinor_s3/repspace.hpp"
#include "spinor_s3/transfer.hpp"

// JSON encodings. Every number that is part of an exact object is written
// as a rational string ("-3/2", "5"); floats only appear in quadrature
// reports. Decoders throw std::invalid_argument (or nlohmann exceptions) on
// malformed input.

namespace spinor_s3 {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);

// {"re":"p/q","im":"p/q"}
void to_json(Json& j, const GaussianRational& z);
void from_json(const Json& j, GaussianRational& z);

// ["c0","c1","c2","c3"]
void to_json(Json& j, const Quaternion& q);
void from_json(const Json& j, Quaternion& q);

// {"view":"z","terms":[{"exp":[a,b,c,d],"coeff":{...}}]}
void to_json(Json& j, const Polynomial& p);
void from_json(const Json& j, Polynomial& p);

// {"k":K,"f":poly,"g":poly}
void to_json(Json& j, const SpinorSection& s);
void from_json(const Json& j, SpinorSection& s);

// {"k":K,"entries":[[z,...],...]} (row-major)
void to_json(Json& j, const RepMatrix& m);
RepMatrix rep_matrix_from_json(const Json& j);

// {"k":K,"coeffs":[z,...]}
void to_json(Json& j, const KetVector& v);
KetVector ket_vector_from_json(const Json& j);

// {"k":K,"q":Q,"coeffs":[{"r":0,"p":P,"c":z},...]} (nonzero entries only)
void to_json(Json& j, const SpinorVector& v);
SpinorVector spinor_vector_from_json(const Json& j);

// polynomial encoding plus "k","p","q","norm_factor_squared"
void to_json(Json& j, const TransferImage& t);
void from_json(const Json& j, TransferImage& t);

// {"unit":"2pi^2","value":z}
void to_json(Json& j, const IntegralValue& v);
void from_json(const Json& j, IntegralValue& v);

// {"rule":"tensor","n_angular":N,"n_radial":M} or {"rule":"mc","samples":N,"seed":S}
void to_json(Json& j, const QuadratureSpec& spec);
void from_json(const Json& j, QuadratureSpec& spec);

// {"k":K,"eigenvalue":"7/2","multiplicity":12}
void to_json(Json& j, const SpectrumRow& row);
void from_json(const Json& j, SpectrumRow& row);

// {"family":"plus","q":Q,"p":P,"eigenvalue":"3/2","section":{...}}
void to_json(Json& j, const TransferredSection& s);
void from_json(const Json& j, TransferredSection& s);

}  // namespace spinor_s3
