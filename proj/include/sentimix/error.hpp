// Copyright 2026 the sentimix authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace sentimix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data (corpus files, label strings, model files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Violated shape / size / argument contract.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// File could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

/// NaN or Inf reached a place where only finite values are allowed.
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace sentimix
