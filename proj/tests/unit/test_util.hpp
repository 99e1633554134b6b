#ifndef FAMSW_TESTS_TEST_UTIL_HPP
#define FAMSW_TESTS_TEST_UTIL_HPP

#include <functional>

#include <gtest/gtest.h>

#include "famsw/errors.hpp"

namespace famsw::testing {

inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::JobError;
}

}  // namespace famsw::testing

#endif  // FAMSW_TESTS_TEST_UTIL_HPP
