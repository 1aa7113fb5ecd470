#pragma once

#include <gtest/gtest.h>

#include <string>
#include <string_view>

#include "linkstar/error.hpp"
#include "linkstar/kernel.hpp"

namespace linkstar::testing {

inline Point P(long x, long y) { return {Rat(x), Rat(y)}; }
inline Point P(std::string_view x, std::string_view y) { return {Rat::parse(x), Rat::parse(y)}; }

template <class F>
::testing::AssertionResult throws_code(F&& f, ErrorCode expected) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() == expected) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "got " << to_string(e.code()) << " (" << e.what() << ")";
  }
  return ::testing::AssertionFailure() << "no exception, wanted " << to_string(expected);
}

}  // namespace linkstar::testing

#define EXPECT_CODE(stmt, code) EXPECT_TRUE(::linkstar::testing::throws_code([&] { (void)(stmt); }, code))
