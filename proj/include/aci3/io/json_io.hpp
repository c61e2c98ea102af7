#pragma once

#include <string>

#include <json.hpp>

#include "aci3/aci.hpp"
#include "aci3/betti.hpp"
#include "aci3/liaison.hpp"
#include "aci3/monomial.hpp"
#include "aci3/oracle/graded_ideal.hpp"

namespace aci3::io {

using nlohmann::json;

/// Parses a file; I/O and syntax failures throw ParseError.
json read_json_file(const std::string& path);

/// {"codim": c, "F": [[...], ...]} plus "minimal": false for tables not
/// known to be minimal.
json table_to_json(const BettiTable& b);
BettiTable table_from_json(const json& j);

/// {"gens": [[e1, e2, e3], ...]}
json monomial_ideal_to_json(const MonomialIdeal3& ideal);
MonomialIdeal3 monomial_ideal_from_json(const json& j);

/// [[coefficient, [e1, e2, e3]], ...]; coefficients are reduced mod p.
json polynomial_to_json(const oracle::HomogeneousPoly& f);
oracle::HomogeneousPoly polynomial_from_json(const json& j, const oracle::PrimeField& field);

/// {"gens": [poly, ...]}; a bare exponent triple stands for a monomial.
json graded_ideal_to_json(const oracle::GradedIdealFp& ideal);
oracle::GradedIdealFp graded_ideal_from_json(const json& j, const oracle::PrimeField& field,
                                             oracle::OracleLimits limits = {});

/// {"d": [...], "dstar": .., "s": [...], "t": .., "u": .., "dtotal": ..}
json shape_to_json(const AciShape& shape);
json gorenstein_shape_to_json(const GorensteinShape& shape);
json linked_to_json(const LinkedGorenstein& linked);

}  // namespace aci3::io
