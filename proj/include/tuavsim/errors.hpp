// Copyright 2026 TUAVSim Project Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUAVSIM_ERRORS_HPP
#define TUAVSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tuavsim {

/// Invalid input, violated invariant, or out-of-domain argument.
/// The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem or stream failure. The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tuavsim

#endif // TUAVSIM_ERRORS_HPP
