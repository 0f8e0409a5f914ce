#pragma once

#include <gtest/gtest.h>

#include "kend/error.hpp"

namespace kend::testing {

/// The code of the kend::Error thrown by `f`; records a failure if nothing is thrown.
template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no kend::Error thrown";
  return ErrorCode::kInvalidArgument;
}

}  // namespace kend::testing
