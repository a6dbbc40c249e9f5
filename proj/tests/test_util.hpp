#ifndef BROKENCYCLE_TEST_UTIL_HPP
#define BROKENCYCLE_TEST_UTIL_HPP

#include <gtest/gtest.h>

#include "brokencycle/error.hpp"

// Expects `stmt` to throw bc::Error carrying `expected_code`.
#define EXPECT_BC_ERROR(stmt, expected_code)                                       \
  do {                                                                             \
    try {                                                                          \
      stmt;                                                                        \
      ADD_FAILURE() << #stmt " did not throw";                                     \
    } catch (const bc::Error& e) {                                                 \
      EXPECT_EQ(bc::error_name(e.code()), bc::error_name(expected_code)) << e.what(); \
    }                                                                              \
  } while (false)

#endif  // BROKENCYCLE_TEST_UTIL_HPP
