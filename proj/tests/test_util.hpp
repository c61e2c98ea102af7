#pragma once

#include <doctest.h>

#include <string>

#include "aci3/betti.hpp"
#include "aci3/error.hpp"
#include "aci3/io/json_io.hpp"

namespace test {

/// Code of the aci3::Error thrown by `fn`; fails the test if none is.
template <class Fn>
aci3::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const aci3::Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return aci3::ErrorCode::InvalidArgument;
}

inline std::string data(const std::string& name) { return std::string(ACI3_TEST_DATA) + "/" + name; }

inline aci3::BettiTable table(const std::string& name) {
  return aci3::io::table_from_json(aci3::io::read_json_file(data(name)));
}

}  // namespace test
