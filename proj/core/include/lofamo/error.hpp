// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lofamo {

// Base class for every domain error raised by the library. The CLI maps
// these to exit code 2; anything else is an environment failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllegalEncoding : public Error {
 public:
  IllegalEncoding(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class UnmappedAddress : public Error {
 public:
  using Error::Error;
};

class MaskViolation : public Error {
 public:
  using Error::Error;
};

class InvalidThresholds : public Error {
 public:
  using Error::Error;
};

class NoLiveLinks : public Error {
 public:
  using Error::Error;
};

class HopLimitExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownTarget : public Error {
 public:
  using Error::Error;
};

}  // namespace lofamo
