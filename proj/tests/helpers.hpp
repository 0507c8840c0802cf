#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mfk/mfk.hpp"

namespace th {

inline mfk::ElementSet s(std::initializer_list<int> one_based) {
  mfk::ElementSet out = 0;
  for (int e : one_based) out |= mfk::singleton(e - 1);
  return out;
}

inline mfk::WeightVector w(std::initializer_list<long> values) {
  mfk::WeightVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline std::vector<std::string> labels(const std::vector<mfk::ElementSet>& sets) {
  std::vector<std::string> out;
  for (auto x : sets) out.push_back(mfk::label(x));
  return out;
}

template <typename Fn>
mfk::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const mfk::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no mfk::Error thrown";
  return mfk::ErrorCode::kUsage;
}

}  // namespace th
