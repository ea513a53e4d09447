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

#include "hyperwb/hyperring.hpp"

#include <string>

namespace hyperwb {

namespace {

std::string cell( const char * table, int a, int b ) {
	return std::string( table ) + "[" + std::to_string( a ) + "][" + std::to_string( b ) + "]";
}

void check_shape( const RawTables & raw ) {
	const int n = raw.size;
	if( n < 1 ) {
		throw DimensionMismatch( "size must be at least 1" );
	}
	if( n > kMaxCarrier ) {
		throw DimensionMismatch( "size " + std::to_string( n ) + " exceeds the supported maximum " + std::to_string( kMaxCarrier ) );
	}
	if( static_cast< int >( raw.add.size() ) != n ) {
		throw DimensionMismatch( "add has " + std::to_string( raw.add.size() ) + " rows, expected " + std::to_string( n ) );
	}
	if( static_cast< int >( raw.hmul.size() ) != n ) {
		throw DimensionMismatch( "hmul has " + std::to_string( raw.hmul.size() ) + " rows, expected " + std::to_string( n ) );
	}
	for( int a = 0; a < n; ++a ) {
		if( static_cast< int >( raw.add[ a ].size() ) != n ) {
			throw DimensionMismatch( "add[" + std::to_string( a ) + "] has " + std::to_string( raw.add[ a ].size() ) + " entries, expected " + std::to_string( n ) );
		}
		if( static_cast< int >( raw.hmul[ a ].size() ) != n ) {
			throw DimensionMismatch( "hmul[" + std::to_string( a ) + "] has " + std::to_string( raw.hmul[ a ].size() ) + " entries, expected " + std::to_string( n ) );
		}
		for( int b = 0; b < n; ++b ) {
			const int v = raw.add[ a ][ b ];
			if( v < 0 || v >= n ) {
				throw DimensionMismatch( cell( "add", a, b ) + " = " + std::to_string( v ) + " out of range" );
			}
			for( int m : raw.hmul[ a ][ b ] ) {
				if( m < 0 || m >= n ) {
					throw DimensionMismatch( cell( "hmul", a, b ) + " contains " + std::to_string( m ) + " out of range" );
				}
			}
		}
	}
	for( int a = 0; a < n; ++a ) {
		for( int b = 0; b < n; ++b ) {
			if( raw.hmul[ a ][ b ].empty() ) {
				throw EmptyHyperproduct( a, b );
			}
		}
	}
}

/// Table view used while checking laws on unvalidated input.
struct Tables {
	int n;
	std::vector< int > add;
	std::vector< ElementSubset > mul;

	explicit Tables( const RawTables & raw ) : n( raw.size ), add( n * n ), mul( n * n ) {
		for( int a = 0; a < n; ++a ) {
			for( int b = 0; b < n; ++b ) {
				add[ a * n + b ] = raw.add[ a ][ b ];
				mul[ a * n + b ] = ElementSubset::from_vector( raw.hmul[ a ][ b ] );
			}
		}
	}

	int plus( int a, int b ) const { return add[ a * n + b ]; }
	ElementSubset times( int a, int b ) const { return mul[ a * n + b ]; }

	ElementSubset times( ElementSubset x, ElementSubset y ) const {
		ElementSubset out;
		x.for_each( [ & ]( int a ) { y.for_each( [ & ]( int b ) { out |= times( a, b ); } ); } );
		return out;
	}

	ElementSubset plus( ElementSubset x, ElementSubset y ) const {
		ElementSubset out;
		x.for_each( [ & ]( int a ) { y.for_each( [ & ]( int b ) { out.insert( plus( a, b ) ); } ); } );
		return out;
	}
};

} // namespace

std::vector< AxiomViolation > HyperRing::check_axioms( const RawTables & raw, ValidationOptions options ) {
	check_shape( raw );
	const Tables t( raw );
	const int n = t.n;
	std::vector< AxiomViolation > out;

	auto first_pair = [ & ]( const char * id, auto && bad ) {
		for( int a = 0; a < n; ++a ) {
			for( int b = 0; b < n; ++b ) {
				if( bad( a, b ) ) {
					out.push_back( { id, { a, b } } );
					return;
				}
			}
		}
	};
	auto first_triple = [ & ]( const char * id, auto && bad ) {
		for( int a = 0; a < n; ++a ) {
			for( int b = 0; b < n; ++b ) {
				for( int c = 0; c < n; ++c ) {
					if( bad( a, b, c ) ) {
						out.push_back( { id, { a, b, c } } );
						return;
					}
				}
			}
		}
	};

	for( int a = 0; a < n; ++a ) {
		if( t.plus( 0, a ) != a || t.plus( a, 0 ) != a ) {
			out.push_back( { "add-identity", { a } } );
			break;
		}
	}
	first_pair( "add-commutative", [ & ]( int a, int b ) { return t.plus( a, b ) != t.plus( b, a ); } );
	first_triple( "add-associative", [ & ]( int a, int b, int c ) {
		return t.plus( t.plus( a, b ), c ) != t.plus( a, t.plus( b, c ) );
	} );

	std::vector< int > neg( n, -1 );
	for( int a = 0; a < n; ++a ) {
		for( int b = 0; b < n; ++b ) {
			if( t.plus( a, b ) == 0 && t.plus( b, a ) == 0 ) {
				neg[ a ] = b;
				break;
			}
		}
	}
	for( int a = 0; a < n; ++a ) {
		if( neg[ a ] < 0 ) {
			out.push_back( { "add-inverse", { a } } );
			break;
		}
	}

	first_triple( "hmul-associative", [ & ]( int a, int b, int c ) {
		return t.times( t.times( a, b ), ElementSubset::singleton( c ) ) != t.times( ElementSubset::singleton( a ), t.times( b, c ) );
	} );
	if( options.require_commutative ) {
		first_pair( "hmul-commutative", [ & ]( int a, int b ) { return t.times( a, b ) != t.times( b, a ); } );
	}
	first_triple( "distributive-left", [ & ]( int a, int b, int c ) {
		return !t.times( a, t.plus( b, c ) ).subset_of( t.plus( t.times( a, b ), t.times( a, c ) ) );
	} );
	first_triple( "distributive-right", [ & ]( int a, int b, int c ) {
		return !t.times( t.plus( b, c ), a ).subset_of( t.plus( t.times( b, a ), t.times( c, a ) ) );
	} );
	first_pair( "sign-compatible", [ & ]( int a, int b ) {
		if( neg[ a ] < 0 || neg[ b ] < 0 ) {
			return false;
		}
		ElementSubset negated;
		t.times( a, b ).for_each( [ & ]( int x ) { negated.insert( neg[ x ] < 0 ? x : neg[ x ] ); } );
		return t.times( a, neg[ b ] ) != negated || t.times( neg[ a ], b ) != negated;
	} );
	return out;
}

HyperRing HyperRing::validate( const RawTables & raw, ValidationOptions options ) {
	auto violations = check_axioms( raw, options );
	if( !violations.empty() ) {
		throw AxiomError( std::move( violations ) );
	}
	HyperRing r;
	r.name_ = raw.name;
	r.construction_ = raw.construction;
	r.source_ = raw.source;
	r.size_ = raw.size;
	const int n = raw.size;
	r.add_.resize( n * n );
	r.mul_.resize( n * n );
	r.neg_.assign( n, 0 );
	for( int a = 0; a < n; ++a ) {
		for( int b = 0; b < n; ++b ) {
			r.add_[ a * n + b ] = raw.add[ a ][ b ];
			r.mul_[ a * n + b ] = ElementSubset::from_vector( raw.hmul[ a ][ b ] );
			if( raw.add[ a ][ b ] == 0 ) {
				r.neg_[ a ] = b;
			}
		}
	}
	r.commutative_ = true;
	for( int a = 0; a < n && r.commutative_; ++a ) {
		for( int b = 0; b < a; ++b ) {
			if( r.mul( a, b ) != r.mul( b, a ) ) {
				r.commutative_ = false;
				break;
			}
		}
	}
	for( int e = 0; e < n; ++e ) {
		bool identity = true;
		bool scalar = true;
		for( int a = 0; a < n; ++a ) {
			const auto single = ElementSubset::singleton( a );
			if( !r.mul( a, e ).contains( a ) || !r.mul( e, a ).contains( a ) ) {
				identity = false;
			}
			if( r.mul( a, e ) != single || r.mul( e, a ) != single ) {
				scalar = false;
			}
		}
		if( identity ) {
			r.identities_.insert( e );
		}
		if( scalar ) {
			r.scalar_identities_.insert( e );
		}
	}
	return r;
}

std::optional< Element > HyperRing::identity() const noexcept {
	if( identities_.empty() ) {
		return std::nullopt;
	}
	return identities_.min();
}

std::optional< Element > HyperRing::scalar_identity() const noexcept {
	if( scalar_identities_.empty() ) {
		return std::nullopt;
	}
	return scalar_identities_.min();
}

ElementSubset HyperRing::product( ElementSubset a, ElementSubset b ) const noexcept {
	ElementSubset out;
	a.for_each( [ & ]( Element x ) {
		const ElementSubset * row = &mul_[ x * size_ ];
		b.for_each( [ & ]( Element y ) { out |= row[ y ]; } );
	} );
	return out;
}

ElementSubset HyperRing::sum( ElementSubset a, ElementSubset b ) const noexcept {
	ElementSubset out;
	a.for_each( [ & ]( Element x ) {
		const Element * row = &add_[ x * size_ ];
		b.for_each( [ & ]( Element y ) { out.insert( row[ y ] ); } );
	} );
	return out;
}

ElementSubset HyperRing::negate( ElementSubset a ) const noexcept {
	ElementSubset out;
	a.for_each( [ & ]( Element x ) { out.insert( neg_[ x ] ); } );
	return out;
}

bool HyperRing::is_ordinary() const noexcept {
	for( const auto & cell : mul_ ) {
		if( !cell.is_singleton() ) {
			return false;
		}
	}
	return true;
}

RawTables HyperRing::to_raw() const {
	RawTables raw;
	raw.name = name_;
	raw.construction = construction_;
	raw.source = source_;
	raw.size = size_;
	raw.add.assign( size_, std::vector< int >( size_ ) );
	raw.hmul.assign( size_, std::vector< std::vector< int > >( size_ ) );
	for( int a = 0; a < size_; ++a ) {
		for( int b = 0; b < size_; ++b ) {
			raw.add[ a ][ b ] = add( a, b );
			raw.hmul[ a ][ b ] = mul( a, b ).to_vector();
		}
	}
	return raw;
}

HyperRing HyperRing::renamed( std::string name ) const {
	HyperRing copy = *this;
	copy.name_ = std::move( name );
	return copy;
}

HyperRing HyperRing::with_provenance( std::string construction, std::string source ) const {
	HyperRing copy = *this;
	copy.construction_ = std::move( construction );
	copy.source_ = std::move( source );
	return copy;
}

bool HyperRing::same_tables( const HyperRing & other ) const noexcept {
	return size_ == other.size_ && add_ == other.add_ && mul_ == other.mul_;
}

ElementSubset element_power( const HyperRing & r, Element x, int n ) {
	const auto single = ElementSubset::singleton( x );
	ElementSubset acc = single;
	for( int k = 1; k < n; ++k ) {
		acc = r.product( acc, single );
	}
	return acc;
}

ElementSubset annihilator( const HyperRing & r, Element x ) {
	const auto zero = ElementSubset::singleton( 0 );
	ElementSubset out;
	for( Element y = 0; y < r.size(); ++y ) {
		if( r.mul( x, y ) == zero ) {
			out.insert( y );
		}
	}
	return out;
}

ElementSubset annihilator_of_set( const HyperRing & r, ElementSubset a ) {
	const auto zero = ElementSubset::singleton( 0 );
	ElementSubset out;
	for( Element y = 0; y < r.size(); ++y ) {
		if( r.product( a, ElementSubset::singleton( y ) ) == zero ) {
			out.insert( y );
		}
	}
	return out;
}

namespace {

bool nilpotent( const HyperRing & r, Element x ) {
	const auto zero = ElementSubset::singleton( 0 );
	const auto single = ElementSubset::singleton( x );
	ElementSubset acc = single;
	for( int k = 1; k <= power_bound( r ); ++k ) {
		if( acc == zero ) {
			return true;
		}
		acc = r.product( acc, single );
	}
	return false;
}

bool regular_vnr( const HyperRing & r, Element x ) {
	const auto square = r.mul( x, x );
	for( Element y = 0; y < r.size(); ++y ) {
		if( r.product( square, ElementSubset::singleton( y ) ).contains( x ) ) {
			return true;
		}
	}
	return false;
}

bool invertible_unchecked( const HyperRing & r, Element x, Element e ) {
	for( Element y = 0; y < r.size(); ++y ) {
		if( r.mul( x, y ).contains( e ) ) {
			return true;
		}
	}
	return false;
}

} // namespace

bool is_invertible( const HyperRing & r, Element x ) {
	const auto e = r.identity();
	if( !e ) {
		throw NoIdentity();
	}
	return invertible_unchecked( r, x, *e );
}

ElementFlags element_predicates( const HyperRing & r, Element x ) {
	ElementFlags f;
	const auto ann = annihilator( r, x );
	f.zero_divisor = !( ann - ElementSubset::singleton( 0 ) ).empty();
	f.nzd = ann == ElementSubset::singleton( 0 );
	f.nilpotent = nilpotent( r, x );
	f.regular_vnr = regular_vnr( r, x );
	if( const auto e = r.identity() ) {
		f.invertible = invertible_unchecked( r, x, *e );
	}
	f.idempotent = r.mul( x, x ).contains( x );
	f.idempotent_strict = r.mul( x, x ) == ElementSubset::singleton( x );
	return f;
}

ElementClasses element_classes( const HyperRing & r ) {
	ElementClasses c;
	for( Element x = 0; x < r.size(); ++x ) {
		const auto f = element_predicates( r, x );
		if( f.zero_divisor ) c.zero_divisors.insert( x );
		if( f.nilpotent ) c.nilpotent.insert( x );
		if( f.regular_vnr ) c.regular_vnr.insert( x );
		if( f.nzd ) c.nzd.insert( x );
		if( f.invertible.value_or( false ) ) c.invertible.insert( x );
		if( f.idempotent ) c.idempotent.insert( x );
		if( f.idempotent_strict ) c.idempotent_strict.insert( x );
	}
	return c;
}

RingFlags classify_ring( const HyperRing & r ) {
	RingFlags flags;
	const int n = r.size();
	flags.integral_hyperdomain = true;
	for( Element x = 1; x < n && flags.integral_hyperdomain; ++x ) {
		for( Element y = 1; y < n; ++y ) {
			if( r.mul( x, y ).contains( 0 ) ) {
				flags.integral_hyperdomain = false;
				break;
			}
		}
	}
	const auto classes = element_classes( r );
	flags.reduced = ( classes.nilpotent - ElementSubset::singleton( 0 ) ).empty();
	flags.regular_ring = classes.regular_vnr == r.carrier();
	if( r.identity() ) {
		flags.invertible_ring = classes.invertible == r.carrier();
		flags.nonzero_invertible = ( r.carrier() - ElementSubset::singleton( 0 ) ).subset_of( classes.invertible );
	}
	return flags;
}

} // namespace hyperwb
