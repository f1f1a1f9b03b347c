/* Copyright 2026 The Succession Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SUCCESSION_ERRORS_HPP_
#define SUCCESSION_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace succession {

// Base for every named failure condition raised by the library. Invariant
// violations on construction (a negative count, masses that do not sum to
// one) are reported as std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  Error(std::string condition, const std::string& what)
      : std::runtime_error(what), condition_(std::move(condition)) {}

  // Stable identifier such as "ZeroEvidenceProbability".
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

// The prior assigns probability zero to the observed evidence, so nothing can
// be conditioned on it.
class ZeroEvidenceProbability : public Error {
 public:
  explicit ZeroEvidenceProbability(const std::string& what)
      : Error("ZeroEvidenceProbability", what) {}
};

// A disconfirming instance was observed; the Bayes factor for the universal
// generalization is zero.
class UGFalsified : public Error {
 public:
  explicit UGFalsified(const std::string& what) : Error("UGFalsified", what) {}
};

class NoContinuousComponent : public Error {
 public:
  explicit NoContinuousComponent(const std::string& what)
      : Error("NoContinuousComponent", what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

// A predictive rule handed to the lab returned something other than a
// probability vector.
class InvalidRule : public Error {
 public:
  explicit InvalidRule(const std::string& what) : Error("InvalidRule", what) {}
};

class SampleTooLarge : public Error {
 public:
  explicit SampleTooLarge(const std::string& what) : Error("SampleTooLarge", what) {}
};

// A dense table or an un-telescoped product would exceed the desk-scale caps.
class ResourceLimitExceeded : public Error {
 public:
  explicit ResourceLimitExceeded(const std::string& what)
      : Error("ResourceLimitExceeded", what) {}
};

}  // namespace succession

#endif  // SUCCESSION_ERRORS_HPP_
