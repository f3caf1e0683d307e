#pragma once

#include "code_core.hpp"
#include "codefile.hpp"
#include "error.hpp"

#include <random>
#include <string>

#ifndef RANKMETRIC_TEST_DATA
#define RANKMETRIC_TEST_DATA "tests/data"
#endif

namespace testutil {

inline std::string data_path(const std::string& name) { return std::string(RANKMETRIC_TEST_DATA) + "/" + name; }

inline rankmetric::RankMetricCode load(const std::string& name) { return rankmetric::parse_code_file(data_path(name)); }

template <class F>
rankmetric::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const rankmetric::Error& e) {
    return e.kind();
  }
  throw std::logic_error("no rankmetric::Error thrown");
}

template <class F>
std::string error_message(F&& f) {
  try {
    f();
  } catch (const rankmetric::Error& e) {
    return e.what();
  }
  return "";
}

inline bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

inline rankmetric::RankDistribution dist(std::initializer_list<int> v) {
  rankmetric::RankDistribution w;
  for (int x : v) w.counts.emplace_back(x);
  return w;
}

}  // namespace testutil
