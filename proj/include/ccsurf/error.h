// Copyright 2026 The ccsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CCSURF_ERROR_H
#define CCSURF_ERROR_H

#include <stdexcept>
#include <string>

namespace ccsurf {

/// Base class for every domain failure raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class SpaceMismatchError : public Error {
   public:
    using Error::Error;
};

class SingularMatrixError : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

class ValidationError : public Error {
   public:
    using Error::Error;
};

class DimensionError : public Error {
   public:
    using Error::Error;
};

class ConventionError : public Error {
   public:
    using Error::Error;
};

/// Raised by decoders for syndromes no genuine error can produce, such as an
/// odd number of defects on a closed surface.
class DecodeError : public Error {
   public:
    using Error::Error;
};

/// Raised when an internal invariant that the construction guarantees turns
/// out false. Seeing one of these means a bug, not bad input.
class InternalError : public Error {
   public:
    using Error::Error;
};

}  // namespace ccsurf

#endif
