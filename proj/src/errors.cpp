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

#include "hyperwb/errors.hpp"

#include <sstream>

namespace hyperwb {

namespace {

std::string join_ints( const std::vector< int > & v ) {
	std::ostringstream os;
	os << '(';
	for( std::size_t i = 0; i < v.size(); ++i ) {
		os << ( i ? "," : "" ) << v[ i ];
	}
	os << ')';
	return os.str();
}

std::string summarize( const std::vector< AxiomViolation > & violations ) {
	std::string out = "axiom violation:";
	for( const auto & v : violations ) {
		out += " " + v.describe();
	}
	return out;
}

} // namespace

std::string AxiomViolation::describe() const {
	return axiom + join_ints( witness );
}

AxiomError::AxiomError( std::vector< AxiomViolation > violations ) :
	HyperError( summarize( violations ) ), violations_( std::move( violations ) ) {}

EmptyHyperproduct::EmptyHyperproduct( int a_, int b_ ) :
	HyperError( "empty hyperproduct at hmul[" + std::to_string( a_ ) + "][" + std::to_string( b_ ) + "]" ),
	a( a_ ), b( b_ ) {}

CapExceeded::CapExceeded( std::string what, int cap_ ) :
	HyperError( what + " exceeds cap " + std::to_string( cap_ ) ), cap( cap_ ) {}

NotClosed::NotClosed( std::string what, std::vector< int > witness_ ) :
	HyperError( what + " not closed, witness " + join_ints( witness_ ) ), witness( std::move( witness_ ) ) {}

NotHomomorphism::NotHomomorphism( std::string law_, int x_, int y_ ) :
	HyperError( "map is not " + law_ + ", witness (" + std::to_string( x_ ) + "," + std::to_string( y_ ) + ")" ),
	law( std::move( law_ ) ), x( x_ ), y( y_ ) {}

IllDefinedQuotient::IllDefinedQuotient( std::string what, std::vector< int > reps ) :
	HyperError( what + " depends on representatives " + join_ints( reps ) ), representatives( std::move( reps ) ) {}

} // namespace hyperwb
