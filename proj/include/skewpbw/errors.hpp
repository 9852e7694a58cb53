/*
   Copyright 2026 The skewpbw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEWPBW_ERRORS_HPP
#define SKEWPBW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewpbw {

// Root of the library's exception hierarchy.  Everything thrown on purpose by
// skewpbw derives from Error, so callers can distinguish our diagnostics from
// genuine std failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing elements of different fields (e.g. a rational with an F_p residue).
class IncompatibleRings : public Error {
public:
    explicit IncompatibleRings(const std::string& what) : Error(what) {}
};

// Mixing elements of structurally different algebra presentations.
class IncompatibleAlgebras : public Error {
public:
    explicit IncompatibleAlgebras(const std::string& what) : Error(what) {}
};

// A presentation failed validation (non-unit relation coefficient,
// non-bijective endomorphism, ill-formed generator names, ...).
class InvalidPresentation : public Error {
public:
    explicit InvalidPresentation(const std::string& what) : Error(what) {}
};

// Bad parameters for a catalog entry (p not prime, q of the wrong
// multiplicative order, zero where a unit is required, ...).
class InvalidParams : public Error {
public:
    explicit InvalidParams(const std::string& what) : Error(what) {}
};

// Catalog lookup by an unknown entry name.
class UnknownEntry : public Error {
public:
    explicit UnknownEntry(const std::string& what) : Error(what) {}
};

// Element-grammar syntax error; `position` is the byte offset into the input
// at which scanning failed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A bounded search (Ore solving, central multiples, order computation)
// exhausted its degree cap without an answer.  Deliberately not a "no" --
// the underlying questions are only semi-decided by bounded search.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, int cap)
        : Error(what + " (cap " + std::to_string(cap) + " exceeded)"), cap_(cap) {}

    int cap() const noexcept { return cap_; }

private:
    int cap_;
};

} // namespace skewpbw

#endif // SKEWPBW_ERRORS_HPP
