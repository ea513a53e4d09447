/*
 *   Copyright 2026 The hyperwb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HYPERWB_ERRORS_HPP
#define HYPERWB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperwb {

/// Base of every error the library throws.
class HyperError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// One failed structure law, with the lexicographically least witness.
struct AxiomViolation {
	std::string axiom;
	std::vector< int > witness;

	std::string describe() const;
	bool operator==( const AxiomViolation & ) const = default;
};

/// Thrown by validation when one or more laws fail. Carries every failed law.
class AxiomError : public HyperError {
public:
	explicit AxiomError( std::vector< AxiomViolation > violations );
	const std::vector< AxiomViolation > & violations() const noexcept { return violations_; }

private:
	std::vector< AxiomViolation > violations_;
};

class DimensionMismatch : public HyperError {
public:
	using HyperError::HyperError;
};

class EmptyHyperproduct : public HyperError {
public:
	EmptyHyperproduct( int a, int b );
	int a;
	int b;
};

class NoIdentity : public HyperError {
public:
	NoIdentity() : HyperError( "hyperring has no identity element" ) {}
};

class CapExceeded : public HyperError {
public:
	CapExceeded( std::string what, int cap );
	int cap;
};

class NotDisjoint : public HyperError {
public:
	using HyperError::HyperError;
};

/// A subset required to be closed (subring, ideal, ...) is not.
class NotClosed : public HyperError {
public:
	NotClosed( std::string what, std::vector< int > witness );
	std::vector< int > witness;
};

/// A candidate map fails additivity or multiplicativity.
class NotHomomorphism : public HyperError {
public:
	NotHomomorphism( std::string law, int x, int y );
	std::string law;
	int x;
	int y;
};

/// A quotient construction whose lifted operation depends on representatives.
class IllDefinedQuotient : public HyperError {
public:
	IllDefinedQuotient( std::string what, std::vector< int > representatives );
	std::vector< int > representatives;
};

/// An operation that requires a nonempty subset received the empty set.
class EmptySet : public HyperError {
public:
	using HyperError::HyperError;
};

/// Malformed input: JSON syntax, missing fields, indices out of range.
class FormatError : public HyperError {
public:
	using HyperError::HyperError;
};

} // namespace hyperwb

#endif // HYPERWB_ERRORS_HPP
