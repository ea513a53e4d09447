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

#include "hyperwb/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace hyperwb {

using json = nlohmann::ordered_json;

namespace {

const char * const kAxisNames[ kAxisCount ] = { "regular", "product", "prime", "idempotent", "r-mult", "nil-free", "invertible", "mult-closed", "gamma", "standing" };

const char * const kAxisValues[ kAxisCount ][ 2 ] = {
	{ "nzd", "vnr" },
	{ "closed", "raw" },
	{ "relaxed", "strict" },
	{ "weak", "strict" },
	{ "contains-all-regular", "literal" },
	{ "no-nonzero-nilpotent", "has-non-nilpotent" },
	{ "nonzero", "all" },
	{ "contains-regular", "consists-of-regular" },
	{ "free-sums", "distinct-summands" },
	{ "enforced", "off" },
};

} // namespace

std::string axis_name( Axis a ) {
	return kAxisNames[ static_cast< int >( a ) ];
}

std::string axis_value_name( Axis a, int v ) {
	return kAxisValues[ static_cast< int >( a ) ][ v ];
}

bool Readings::is_default() const noexcept {
	return std::all_of( value.begin(), value.end(), []( int v ) { return v == 0; } );
}

json Readings::to_json() const {
	json out = json::object();
	for( int k = 0; k < kAxisCount; ++k ) {
		if( value[ k ] ) {
			out[ kAxisNames[ k ] ] = kAxisValues[ k ][ value[ k ] ];
		}
	}
	return out;
}

std::string Readings::label() const {
	std::string out;
	for( int k = 0; k < kAxisCount; ++k ) {
		if( value[ k ] ) {
			out += ( out.empty() ? "" : "," ) + std::string( kAxisNames[ k ] ) + "=" + kAxisValues[ k ][ value[ k ] ];
		}
	}
	return out.empty() ? "default" : out;
}

json default_readings_json() {
	json out = json::object();
	for( int k = 0; k < kAxisCount; ++k ) {
		out[ kAxisNames[ k ] ] = kAxisValues[ k ][ 0 ];
	}
	return out;
}

Readings parse_readings( const std::string & text ) {
	Readings r;
	if( text.empty() || text == "default" ) {
		return r;
	}
	std::istringstream in( text );
	std::string term;
	while( std::getline( in, term, ',' ) ) {
		const auto eq = term.find( '=' );
		const auto key = term.substr( 0, eq );
		const auto val = eq == std::string::npos ? std::string() : term.substr( eq + 1 );
		bool found = false;
		for( int k = 0; k < kAxisCount && !found; ++k ) {
			if( key != kAxisNames[ k ] ) {
				continue;
			}
			for( int v = 0; v < 2; ++v ) {
				if( val == kAxisValues[ k ][ v ] ) {
					r.value[ k ] = v;
					found = true;
				}
			}
			if( !found ) {
				throw FormatError( "reading " + key + " has no value '" + val + "'" );
			}
		}
		if( !found ) {
			throw FormatError( "unknown reading axis '" + key + "'" );
		}
	}
	return r;
}

std::string status_name( Status s ) {
	switch( s ) {
	case Status::holds:
		return "holds";
	case Status::counterexample:
		return "counterexample";
	case Status::not_applicable:
		return "not-applicable";
	}
	return "?";
}

namespace {

json js( ElementSubset s ) {
	json a = json::array();
	s.for_each( [ & ]( Element x ) { a.push_back( x ); } );
	return a;
}

json js( const std::vector< ElementSubset > & v ) {
	json a = json::array();
	for( const auto s : v ) {
		a.push_back( js( s ) );
	}
	return a;
}

/// First failure in canonical order, plus the number of instances seen.
class Scan {
public:
	bool done() const noexcept { return failed_; }
	void hit() noexcept { ++instances_; }
	void fail( json w ) {
		if( !failed_ ) {
			failed_ = true;
			witness_ = std::move( w );
		}
	}
	void note( std::string n ) { notes_.push_back( std::move( n ) ); }

	Outcome result() const {
		Outcome o;
		o.status = failed_ ? Status::counterexample : Status::holds;
		o.instances = instances_;
		o.witness = witness_;
		for( const auto & n : notes_ ) {
			o.reason += ( o.reason.empty() ? "" : "; " ) + n;
		}
		return o;
	}

private:
	bool failed_ = false;
	long long instances_ = 0;
	json witness_;
	std::vector< std::string > notes_;
};

Outcome not_applicable( std::string reason ) {
	Outcome o;
	o.status = Status::not_applicable;
	o.reason = std::move( reason );
	return o;
}


/// Shorthands over one ring under one reading.
class Tools {
public:
	explicit Tools( const CheckEnv & env ) : env_( env ), ctx_( env.ctx ), r_( env.ctx.ring() ) {}

	const RingContext & ctx() const { return ctx_; }
	const HyperRing & ring() const { return r_; }
	const Readings & rd() const { return env_.readings; }
	const HarnessOptions & options() const { return env_.options; }
	const RingPool & pool() const { return env_.pool; }
	ElementSubset all() const { return r_.carrier(); }
	ElementSubset zero() const { return ElementSubset::singleton( 0 ); }
	ElementSubset r0() const { return ctx_.nil_radical(); }
	const std::vector< ElementSubset > & ideals() const { return ctx_.ideals(); }

	std::vector< ElementSubset > proper() const {
		std::vector< ElementSubset > out;
		for( const auto i : ideals() ) {
			if( i != all() ) {
				out.push_back( i );
			}
		}
		return out;
	}

	ElementSubset regular() const { return ctx_.regular( rd().regular() ); }
	ElementSubset nzd() const { return ctx_.elements().nzd; }
	ElementSubset zero_divisors() const { return ctx_.elements().zero_divisors; }

	bool r_ideal( ElementSubset i ) const { return static_cast< bool >( is_r_hyperideal( ctx_, i, rd().prime() ) ); }
	bool n_ideal( ElementSubset i ) const { return n_ideal_in( ctx_, i ); }
	bool prime( ElementSubset i ) const { return static_cast< bool >( is_prime( ctx_, i, rd().prime() ) ); }

	static bool n_ideal_in( const RingContext & c, ElementSubset i ) {
		return !i.empty() && c.is_ideal( i ) && static_cast< bool >( is_n_hyperideal( c, i ) );
	}

	std::vector< ElementSubset > filter( bool ( Tools::*pred )( ElementSubset ) const, bool proper_only = false ) const {
		std::vector< ElementSubset > out;
		for( const auto i : ideals() ) {
			if( ( !proper_only || i != all() ) && ( this->*pred )( i ) ) {
				out.push_back( i );
			}
		}
		return out;
	}

	std::vector< ElementSubset > primes() const { return filter( &Tools::prime ); }

	std::vector< ElementSubset > minimal_primes() const {
		const auto ps = primes();
		std::vector< ElementSubset > out;
		for( const auto p : ps ) {
			if( std::none_of( ps.begin(), ps.end(), [ p ]( ElementSubset q ) { return q != p && q.subset_of( p ); } ) ) {
				out.push_back( p );
			}
		}
		return out;
	}

	std::vector< ElementSubset > maximal( const std::vector< ElementSubset > & cls ) const {
		std::vector< ElementSubset > out;
		for( const auto p : cls ) {
			if( std::none_of( cls.begin(), cls.end(), [ p ]( ElementSubset q ) { return q != p && p.subset_of( q ); } ) ) {
				out.push_back( p );
			}
		}
		return out;
	}

	/// A o B under the product reading.
	ElementSubset prod( ElementSubset a, ElementSubset b ) const {
		if( rd().is( Axis::product, 1 ) ) {
			return r_.product( a, b );
		}
		return ideal_product( r_, a, b ).members;
	}

	Element one() const {
		if( const auto s = r_.scalar_identity() ) {
			return *s;
		}
		return *r_.identity();
	}

	/// Nonempty subsets in canonical order when small, else a structured family.
	std::vector< ElementSubset > subset_candidates() const {
		std::vector< ElementSubset > out;
		const int n = r_.size();
		if( n <= options().subset_scan_max ) {
			const std::uint64_t total = std::uint64_t( 1 ) << n;
			for( std::uint64_t m = 1; m < total; ++m ) {
				out.emplace_back( m );
			}
		} else {
			std::unordered_set< ElementSubset > seen;
			auto push = [ & ]( ElementSubset s ) {
				if( !s.empty() && seen.insert( s ).second ) {
					out.push_back( s );
				}
			};
			for( const auto i : ideals() ) {
				push( i );
				push( all() - i );
				push( ( all() - r0() ) | i );
			}
			const auto id = r_.identity();
			for( Element x = 0; x < n; ++x ) {
				for( Element y = x; y < n; ++y ) {
					ElementSubset base = ElementSubset::singleton( x ) | ElementSubset::singleton( y );
					push( base );
					push( base | ( all() - r0() ) );
					for( const auto extra : { ElementSubset(), nzd() } ) {
						ElementSubset seed = base | extra;
						if( id ) {
							seed.insert( *id );
						}
						push( mult_closure( seed ) );
					}
				}
			}
		}
		std::sort( out.begin(), out.end(), ElementSubset::canonical_less );
		return out;
	}

	ElementSubset mult_closure( ElementSubset s ) const {
		for( ;; ) {
			const auto next = s | r_.product( s, s );
			if( next == s ) {
				return s;
			}
			s = next;
		}
	}

	/// 1 in T, 0 not in T, T o T inside T.
	bool mult_closed( ElementSubset t ) const {
		const auto id = r_.identity();
		return id && t.contains( one() ) && !t.contains( 0 ) && r_.product( t, t ).subset_of( t );
	}

private:
	const CheckEnv & env_;
	const RingContext & ctx_;
	const HyperRing & r_;
};

json pair_js( Element x, Element y ) {
	return json::array( { x, y } );
}

/// Covers of i by a designated member and up to two further hyperideals
/// such that no member can be dropped.
template< class Designated, class Other, class Body >
void for_each_cover( const Tools & t, Scan & scan, Designated designated, Other other, Body body ) {
	const auto & ids = t.ideals();
	for( const auto i : ids ) {
		for( const auto d : ids ) {
			if( scan.done() || !designated( d ) ) {
				continue;
			}
			std::vector< ElementSubset > rest;
			for( const auto o : ids ) {
				if( o != d && other( o ) ) {
					rest.push_back( o );
				}
			}
			const std::size_t m = rest.size();
			auto visit = [ & ]( const std::vector< ElementSubset > & others ) {
				if( scan.done() ) {
					return;
				}
				ElementSubset uni = d;
				for( const auto o : others ) {
					uni |= o;
				}
				if( !i.subset_of( uni ) ) {
					return;
				}
				std::vector< ElementSubset > members = others;
				members.insert( members.begin(), d );
				for( std::size_t k = 0; k < members.size(); ++k ) {
					ElementSubset without;
					for( std::size_t j = 0; j < members.size(); ++j ) {
						if( j != k ) {
							without |= members[ j ];
						}
					}
					if( i.subset_of( without ) ) {
						return;
					}
				}
				body( i, d, others );
			};
			visit( {} );
			for( std::size_t a = 0; a < m; ++a ) {
				visit( { rest[ a ] } );
				for( std::size_t b = a + 1; b < m; ++b ) {
					visit( { rest[ a ], rest[ b ] } );
				}
			}
		}
	}
}

// ---------------------------------------------------------------- section: r

Outcome t01( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto v = t.regular();
	const auto & ids = t.ideals();
	for( const auto i : ids ) {
		if( scan.done() ) {
			break;
		}
		scan.hit();
		const bool lhs = t.r_ideal( i );
		std::optional< std::pair< ElementSubset, ElementSubset > > broken;
		for( const auto i1 : ids ) {
			for( const auto i2 : ids ) {
				if( !broken && i1.intersects( v ) && t.prod( i1, i2 ).subset_of( i ) && !i2.subset_of( i ) ) {
					broken = { i1, i2 };
				}
			}
		}
		if( lhs == !broken ) {
			continue;
		}
		json w = { { "part", 1 }, { "I", js( i ) }, { "r_ideal", lhs } };
		if( broken ) {
			w[ "I1" ] = js( broken->first );
			w[ "I2" ] = js( broken->second );
		}
		scan.fail( w );
	}
	const auto rs = t.filter( &Tools::r_ideal );
	for( const auto i : ids ) {
		if( scan.done() || !i.intersects( v ) ) {
			continue;
		}
		for( std::size_t a = 0; a < rs.size() && !scan.done(); ++a ) {
			for( std::size_t b = a + 1; b < rs.size() && !scan.done(); ++b ) {
				scan.hit();
				const bool same_prod = t.prod( i, rs[ a ] ) == t.prod( i, rs[ b ] );
				const bool same_meet = ( i & rs[ a ] ) == ( i & rs[ b ] );
				if( same_prod || same_meet ) {
					scan.fail( { { "part", 2 }, { "I", js( i ) }, { "I1", js( rs[ a ] ) }, { "I2", js( rs[ b ] ) }, { "equal_products", same_prod }, { "equal_intersections", same_meet } } );
				}
			}
		}
	}
	for( const auto j : ids ) {
		if( scan.done() || !j.intersects( v ) ) {
			continue;
		}
		for( const auto i : ids ) {
			const auto k = t.prod( i, j );
			if( scan.done() || !t.ctx().is_ideal( k ) || !t.r_ideal( k ) ) {
				continue;
			}
			scan.hit();
			if( k != i || !t.r_ideal( i ) ) {
				scan.fail( { { "part", 3 }, { "I", js( i ) }, { "J", js( j ) }, { "IJ", js( k ) } } );
			}
		}
	}
	return scan.result();
}

Outcome t02( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto v = t.regular();
	const auto & r = t.ring();
	for( const auto i : t.ideals() ) {
		if( scan.done() ) {
			break;
		}
		scan.hit();
		const bool c1 = t.r_ideal( i );
		std::optional< Element > f2, f3;
		v.for_each( [ & ]( Element a ) {
			const auto single = ElementSubset::singleton( a );
			if( !f2 && ( generated_ideal( r, single ) & i ) != t.prod( single, i ) ) {
				f2 = a;
			}
			if( !f3 && !i.contains( a ) && colon( r, i, single ) != i ) {
				f3 = a;
			}
		} );
		const bool c2 = !f2, c3 = !f3;
		if( c1 != c2 || c2 != c3 ) {
			json w = { { "I", js( i ) }, { "r_ideal", c1 }, { "generated_meet", c2 }, { "colon_fixed", c3 } };
			if( f2 ) {
				w[ "a2" ] = *f2;
			}
			if( f3 ) {
				w[ "a3" ] = *f3;
			}
			scan.fail( w );
		}
	}
	return scan.result();
}

template< class Pred >
Outcome intersection_closed( const Tools & t, Pred pred, const char * what ) {
	Scan scan;
	std::vector< ElementSubset > cls;
	for( const auto i : t.ideals() ) {
		if( pred( i ) ) {
			cls.push_back( i );
		}
	}
	for( std::size_t a = 0; a < cls.size() && !scan.done(); ++a ) {
		for( std::size_t b = a + 1; b < cls.size() && !scan.done(); ++b ) {
			scan.hit();
			if( !pred( cls[ a ] & cls[ b ] ) ) {
				scan.fail( { { "I", js( cls[ a ] ) }, { "J", js( cls[ b ] ) }, { "meet", js( cls[ a ] & cls[ b ] ) }, { "class", what } } );
			}
		}
	}
	return scan.result();
}

Outcome t03( const CheckEnv & env ) {
	Tools t( env );
	return intersection_closed( t, [ & ]( ElementSubset i ) { return t.ctx().is_ideal( i ) && t.r_ideal( i ); }, "r" );
}

Outcome t04( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto z = t.zero_divisors();
	for( const auto i : t.proper() ) {
		if( scan.done() || !t.r_ideal( i ) ) {
			continue;
		}
		scan.hit();
		if( !i.subset_of( z ) ) {
			scan.fail( { { "I", js( i ) }, { "Z", js( z ) }, { "x", ( i - z ).min() } } );
		}
	}
	return scan.result();
}

Outcome t05( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	for( Element x = 1; x < t.ring().size() && !scan.done(); ++x ) {
		scan.hit();
		const auto a = annihilator( t.ring(), x );
		if( !t.ctx().is_ideal( a ) || !t.r_ideal( a ) ) {
			scan.fail( { { "x", x }, { "ann", js( a ) }, { "hyperideal", t.ctx().is_ideal( a ) } } );
		}
	}
	return scan.result();
}

Outcome t06( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	scan.hit();
	const auto & r = t.ring();
	const bool c1 = t.ctx().flags().integral_hyperdomain;
	const auto rs = t.filter( &Tools::r_ideal, true );
	const bool c2 = rs.size() == 1 && rs.front() == t.zero();
	std::optional< std::pair< Element, Element > > f3;
	for( Element x = 0; x < r.size() && !f3; ++x ) {
		for( Element y = 0; y < r.size() && !f3; ++y ) {
			if( annihilator_of_set( r, r.mul( x, y ) ) != ( annihilator( r, x ) | annihilator( r, y ) ) ) {
				f3 = { x, y };
			}
		}
	}
	const bool c3 = !f3;
	if( c1 != c2 || c2 != c3 ) {
		json w = { { "integral", c1 }, { "zero_only_r_ideal", c2 }, { "ann_union", c3 }, { "proper_r_ideals", js( rs ) } };
		if( f3 ) {
			w[ "xy" ] = pair_js( f3->first, f3->second );
		}
		scan.fail( w );
	}
	return scan.result();
}

Outcome t07( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto & r = t.ring();
	const Element one = t.one();
	for( Element x = 0; x < r.size() && !scan.done(); ++x ) {
		const Element y = r.sub( one, x );
		scan.hit();
		const auto s = ideal_sum( r, annihilator( r, x ), annihilator( r, y ) );
		if( !t.r_ideal( s.members ) ) {
			scan.fail( { { "x", x }, { "y", y }, { "sum", js( s.members ) }, { "repaired", s.repaired } } );
		}
	}
	return scan.result();
}

Outcome t08( const CheckEnv & env, bool minimal_prime ) {
	Tools t( env );
	Scan scan;
	if( !t.ctx().flags().reduced ) {
		return scan.result();
	}
	const auto & r = t.ring();
	std::vector< ElementSubset > ps;
	if( minimal_prime ) {
		ps = t.minimal_primes();
	} else {
		for( const auto i : t.ideals() ) {
			if( is_minimal( t.ctx(), i ) ) {
				ps.push_back( i );
			}
		}
	}
	const auto idem = t.rd().is( Axis::idempotent, 0 ) ? t.ctx().elements().idempotent : t.ctx().elements().idempotent_strict;
	for( const auto p : ps ) {
		idem.for_each( [ & ]( Element s ) {
			if( scan.done() ) {
				return;
			}
			scan.hit();
			const auto sum = ideal_sum( r, p, annihilator( r, s ) );
			if( !t.r_ideal( sum.members ) ) {
				scan.fail( { { "P", js( p ) }, { "s", s }, { "sum", js( sum.members ) } } );
			}
		} );
	}
	return scan.result();
}

// ---------------------------------------------------------------- section: primes

Outcome t09( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	for( const auto m : t.maximal( t.filter( &Tools::r_ideal, true ) ) ) {
		if( scan.done() ) {
			break;
		}
		scan.hit();
		if( !t.prime( m ) ) {
			const auto c = is_prime( t.ctx(), m, t.rd().prime() );
			scan.fail( { { "M", js( m ) }, { "witness", c.witness } } );
		}
	}
	return scan.result();
}

Outcome t10( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto z = t.zero_divisors();
	for( const auto p : t.primes() ) {
		if( scan.done() ) {
			break;
		}
		scan.hit();
		if( t.r_ideal( p ) != p.subset_of( z ) ) {
			scan.fail( { { "P", js( p ) }, { "r_ideal", t.r_ideal( p ) }, { "Z", js( z ) } } );
		}
	}
	return scan.result();
}

Outcome t11( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto ps = t.primes();
	auto incomparable = []( ElementSubset a, ElementSubset b ) { return !a.subset_of( b ) && !b.subset_of( a ); };
	auto check = [ & ]( const std::vector< ElementSubset > & fam ) {
		if( scan.done() ) {
			return;
		}
		ElementSubset meet = t.all();
		for( const auto p : fam ) {
			meet &= p;
		}
		if( !t.r_ideal( meet ) ) {
			return;
		}
		scan.hit();
		for( const auto p : fam ) {
			if( !t.r_ideal( p ) ) {
				scan.fail( { { "family", js( fam ) }, { "P", js( p ) } } );
				return;
			}
		}
	};
	const std::size_t m = ps.size();
	for( std::size_t a = 0; a < m; ++a ) {
		check( { ps[ a ] } );
		for( std::size_t b = a + 1; b < m; ++b ) {
			if( !incomparable( ps[ a ], ps[ b ] ) ) {
				continue;
			}
			check( { ps[ a ], ps[ b ] } );
			for( std::size_t c = b + 1; c < m; ++c ) {
				if( incomparable( ps[ a ], ps[ c ] ) && incomparable( ps[ b ], ps[ c ] ) ) {
					check( { ps[ a ], ps[ b ], ps[ c ] } );
				}
			}
		}
	}
	return scan.result();
}

Outcome t12( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	if( !t.ctx().flags().reduced ) {
		return scan.result();
	}
	const auto maxr = t.maximal( t.filter( &Tools::r_ideal, true ) );
	const auto minp = t.minimal_primes();
	for( const auto i : t.filter( &Tools::r_ideal, true ) ) {
		if( scan.done() || is_essential( t.ctx(), i ) ) {
			continue;
		}
		scan.hit();
		const bool found = std::any_of( minp.begin(), minp.end(), [ & ]( ElementSubset p ) {
			return i.subset_of( p ) && std::find( maxr.begin(), maxr.end(), p ) != maxr.end();
		} );
		if( !found ) {
			scan.fail( { { "I", js( i ) }, { "minimal_primes", js( minp ) }, { "maximal_r_ideals", js( maxr ) } } );
		}
	}
	return scan.result();
}

Outcome t13( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto v = t.regular();
	for_each_cover(
	    t, scan, [ & ]( ElementSubset d ) { return t.r_ideal( d ); }, [ & ]( ElementSubset o ) { return o.intersects( v ); },
	    [ & ]( ElementSubset i, ElementSubset d, const std::vector< ElementSubset > & others ) {
		    scan.hit();
		    if( !i.subset_of( d ) ) {
			    scan.fail( { { "I", js( i ) }, { "I1", js( d ) }, { "others", js( others ) } } );
		    }
	    } );
	return scan.result();
}

Outcome t14( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto v = t.regular();
	const auto minp = t.minimal_primes();
	for_each_cover(
	    t, scan, [ & ]( ElementSubset d ) { return std::find( minp.begin(), minp.end(), d ) != minp.end(); },
	    [ & ]( ElementSubset o ) { return o.intersects( v ); },
	    [ & ]( ElementSubset i, ElementSubset d, const std::vector< ElementSubset > & others ) {
		    scan.hit();
		    if( !i.subset_of( d ) ) {
			    scan.fail( { { "I", js( i ) }, { "P1", js( d ) }, { "others", js( others ) } } );
		    }
	    } );
	return scan.result();
}

std::vector< ElementSubset > r_mult_sets( const Tools & t, const std::vector< ElementSubset > & cands ) {
	std::vector< ElementSubset > out;
	for( const auto s : cands ) {
		if( is_r_mult_closed( t.ctx(), s, t.rd().r_mult() ) ) {
			out.push_back( s );
		}
	}
	return out;
}

Outcome t15( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto cands = t.subset_candidates();
	const auto ss = r_mult_sets( t, cands );
	const auto v = t.regular();
	std::vector< ElementSubset > ts;
	for( const auto c : cands ) {
		const bool has_regular = t.rd().is( Axis::mult_closed, 0 ) ? c.intersects( v ) : c.subset_of( v );
		if( has_regular && t.mult_closed( c ) ) {
			ts.push_back( c );
		}
	}
	for( const auto s : ss ) {
		for( const auto tt : ts ) {
			if( scan.done() ) {
				return scan.result();
			}
			scan.hit();
			const auto d = s | tt | t.ring().product( s, tt );
			const auto c = is_r_mult_closed( t.ctx(), d, t.rd().r_mult() );
			if( !c ) {
				scan.fail( { { "S", js( s ) }, { "T", js( tt ) }, { "D", js( d ) }, { "zero_in_D", d.contains( 0 ) }, { "witness", c.witness } } );
			}
		}
	}
	return scan.result();
}

Outcome t16( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	for( const auto i : t.proper() ) {
		if( scan.done() ) {
			break;
		}
		scan.hit();
		const bool lhs = t.r_ideal( i );
		const auto c = is_r_mult_closed( t.ctx(), t.all() - i, t.rd().r_mult() );
		if( lhs != c.holds ) {
			scan.fail( { { "I", js( i ) }, { "r_ideal", lhs }, { "complement_r_mult_closed", c.holds }, { "witness", c.witness } } );
		}
	}
	return scan.result();
}

Outcome t17( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	for( const auto s : r_mult_sets( t, t.subset_candidates() ) ) {
		for( const auto k : t.ideals() ) {
			if( scan.done() ) {
				return scan.result();
			}
			if( k.intersects( s ) ) {
				continue;
			}
			for( const auto i : maximal_disjoint_ideals( t.ctx(), s, k ) ) {
				scan.hit();
				if( !t.r_ideal( i ) ) {
					scan.fail( { { "S", js( s ) }, { "K", js( k ) }, { "I", js( i ) } } );
					break;
				}
			}
		}
	}
	return scan.result();
}

// ---------------------------------------------------------------- section: n

Outcome t18( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	for( const auto i : t.filter( &Tools::n_ideal ) ) {
		scan.hit();
		if( !t.r_ideal( i ) ) {
			scan.fail( { { "I", js( i ) } } );
			break;
		}
	}
	return scan.result();
}

Outcome t19( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	if( !is_primary( t.ctx(), t.zero(), t.rd().prime() ) ) {
		return scan.result();
	}
	for( const auto i : t.proper() ) {
		scan.hit();
		if( t.n_ideal( i ) != t.r_ideal( i ) ) {
			scan.fail( { { "I", js( i ) }, { "n_ideal", t.n_ideal( i ) }, { "r_ideal", t.r_ideal( i ) } } );
			break;
		}
	}
	return scan.result();
}

Outcome t20( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	for( const auto i : t.filter( &Tools::n_ideal ) ) {
		scan.hit();
		if( !i.subset_of( t.r0() ) ) {
			scan.fail( { { "I", js( i ) }, { "r0", js( t.r0() ) } } );
			break;
		}
	}
	return scan.result();
}

Outcome t21( const CheckEnv & env ) {
	Tools t( env );
	return intersection_closed( t, [ & ]( ElementSubset i ) { return t.n_ideal( i ); }, "n" );
}

Outcome t22( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto & r = t.ring();
	const auto outside = t.all() - t.r0();
	const auto & ids = t.ideals();
	for( const auto i : t.proper() ) {
		if( scan.done() ) {
			break;
		}
		scan.hit();
		const bool c1 = t.n_ideal( i );
		std::optional< Element > f2;
		outside.for_each( [ & ]( Element a ) {
			if( !f2 && colon( r, i, ElementSubset::singleton( a ) ) != i ) {
				f2 = a;
			}
		} );
		std::optional< std::pair< ElementSubset, ElementSubset > > f3;
		for( const auto i1 : ids ) {
			for( const auto i2 : ids ) {
				if( !f3 && i1.intersects( outside ) && t.prod( i1, i2 ).subset_of( i ) && !i2.subset_of( i ) ) {
					f3 = { i1, i2 };
				}
			}
		}
		const bool c2 = !f2, c3 = !f3;
		if( c1 != c2 || c2 != c3 ) {
			json w = { { "I", js( i ) }, { "n_ideal", c1 }, { "colon_fixed", c2 }, { "product_cancel", c3 } };
			if( f2 ) {
				w[ "a" ] = *f2;
			}
			if( f3 ) {
				w[ "I1" ] = js( f3->first );
				w[ "I2" ] = js( f3->second );
			}
			scan.fail( w );
		}
	}
	return scan.result();
}

Outcome t23( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto ns = t.filter( &Tools::n_ideal );
	const auto outside = t.all() - t.r0();
	for( const auto l : t.ideals() ) {
		if( !l.intersects( outside ) ) {
			continue;
		}
		for( std::size_t a = 0; a < ns.size() && !scan.done(); ++a ) {
			for( std::size_t b = a + 1; b < ns.size() && !scan.done(); ++b ) {
				scan.hit();
				if( t.prod( ns[ a ], l ) == t.prod( ns[ b ], l ) ) {
					scan.fail( { { "L", js( l ) }, { "I", js( ns[ a ] ) }, { "J", js( ns[ b ] ) }, { "IL", js( t.prod( ns[ a ], l ) ) } } );
				}
			}
		}
	}
	return scan.result();
}

Outcome t24( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	for( const auto p : t.primes() ) {
		scan.hit();
		if( t.n_ideal( p ) != ( p == t.r0() ) ) {
			scan.fail( { { "P", js( p ) }, { "n_ideal", t.n_ideal( p ) }, { "r0", js( t.r0() ) } } );
			break;
		}
	}
	return scan.result();
}

Outcome t25( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	scan.hit();
	const auto r0 = t.r0();
	const bool p = r0 != t.all() && t.prime( r0 );
	const bool n = t.n_ideal( r0 );
	if( p != n ) {
		scan.fail( { { "r0", js( r0 ) }, { "prime", p }, { "n_ideal", n } } );
	}
	return scan.result();
}

Outcome t26( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto cands = t.subset_candidates();
	for( const auto i : t.filter( &Tools::n_ideal ) ) {
		for( const auto s : cands ) {
			if( scan.done() ) {
				return scan.result();
			}
			if( s.subset_of( i ) ) {
				continue;
			}
			scan.hit();
			const auto k = colon( t.ring(), i, s );
			if( !t.n_ideal( k ) ) {
				scan.fail( { { "I", js( i ) }, { "T", js( s ) }, { "colon", js( k ) }, { "hyperideal", !k.empty() && t.ctx().is_ideal( k ) } } );
			}
		}
	}
	return scan.result();
}

Outcome t27( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	for( const auto m : t.maximal( t.filter( &Tools::n_ideal ) ) ) {
		scan.hit();
		if( m != t.r0() ) {
			scan.fail( { { "I", js( m ) }, { "r0", js( t.r0() ) } } );
			break;
		}
	}
	return scan.result();
}

Outcome t28( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	scan.hit();
	const auto r0 = t.r0();
	const bool p = r0 != t.all() && t.prime( r0 );
	const auto ns = t.filter( &Tools::n_ideal );
	if( p != !ns.empty() ) {
		scan.fail( { { "r0", js( r0 ) }, { "prime", p }, { "n_ideals", js( ns ) } } );
	}
	return scan.result();
}

Outcome t29( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	for( const auto i : t.ideals() ) {
		scan.hit();
		const auto comp = t.all() - i;
		const bool rhs = !comp.empty() && is_n_mult_closed( t.ctx(), comp ).holds;
		if( t.n_ideal( i ) != rhs ) {
			scan.fail( { { "I", js( i ) }, { "n_ideal", t.n_ideal( i ) }, { "complement_n_mult_closed", rhs } } );
			break;
		}
	}
	return scan.result();
}

Outcome t30( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	for( const auto s : t.subset_candidates() ) {
		if( !is_n_mult_closed( t.ctx(), s ) ) {
			continue;
		}
		for( const auto k : t.ideals() ) {
			if( scan.done() ) {
				return scan.result();
			}
			if( k.intersects( s ) ) {
				continue;
			}
			for( const auto i : maximal_disjoint_ideals( t.ctx(), s, k ) ) {
				scan.hit();
				if( !t.n_ideal( i ) ) {
					scan.fail( { { "S", js( s ) }, { "K", js( k ) }, { "I", js( i ) } } );
					break;
				}
			}
		}
	}
	return scan.result();
}

Outcome t31( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto nil = t.ctx().elements().nilpotent;
	const bool nonzero_reading = t.rd().is( Axis::nil_free, 0 );
	auto nil_free = [ & ]( ElementSubset o ) { return nonzero_reading ? ( o & nil ) == t.zero() : !o.subset_of( nil ); };
	for_each_cover(
	    t, scan, [ & ]( ElementSubset d ) { return t.n_ideal( d ); }, nil_free,
	    [ & ]( ElementSubset i, ElementSubset d, const std::vector< ElementSubset > & others ) {
		    scan.hit();
		    if( !i.subset_of( d ) ) {
			    scan.fail( { { "I", js( i ) }, { "It", js( d ) }, { "others", js( others ) } } );
		    }
	    } );
	return scan.result();
}

Outcome t32( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto & f = t.ctx().flags();
	if( !f.reduced ) {
		return scan.result();
	}
	scan.hit();
	const auto ns = t.filter( &Tools::n_ideal );
	if( !f.integral_hyperdomain && !ns.empty() ) {
		scan.fail( { { "part", 1 }, { "n_ideals", js( ns ) } } );
	} else if( t.n_ideal( t.zero() ) != f.integral_hyperdomain ) {
		scan.fail( { { "part", 2 }, { "zero_n_ideal", t.n_ideal( t.zero() ) }, { "integral", f.integral_hyperdomain } } );
	}
	return scan.result();
}

Outcome t33( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	scan.hit();
	const auto ns = t.filter( &Tools::n_ideal );
	const bool only_zero = ns.size() == 1 && ns.front() == t.zero();
	if( only_zero != t.ctx().flags().integral_hyperdomain ) {
		scan.fail( { { "n_ideals", js( ns ) }, { "integral", t.ctx().flags().integral_hyperdomain } } );
	}
	return scan.result();
}

Outcome t34( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	scan.hit();
	const auto & f = t.ctx().flags();
	const bool inv = t.rd().is( Axis::invertible, 0 ) ? f.nonzero_invertible : f.invertible_ring;
	const bool rhs = f.regular_ring && t.n_ideal( t.zero() );
	if( inv != rhs ) {
		scan.fail( { { "invertible", inv }, { "regular", f.regular_ring }, { "zero_n_ideal", t.n_ideal( t.zero() ) } } );
	}
	return scan.result();
}

// ---------------------------------------------------------------- section: stability

bool usable( const Tools & t, const RingContext & other ) {
	return other.ring().commutative() && ( t.rd().is( Axis::standing, 1 ) || other.all_ideals_C() );
}

std::vector< ElementSubset > n_ideals_of( const RingContext & c ) {
	std::vector< ElementSubset > out;
	for( const auto i : c.ideals() ) {
		if( Tools::n_ideal_in( c, i ) ) {
			out.push_back( i );
		}
	}
	return out;
}

Outcome t35( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto & r = t.ring();
	const auto mine = t.filter( &Tools::n_ideal );
	int skipped = 0;
	for( const auto & other : t.pool().rings ) {
		const auto & s = other->ring();
		if( r.size() * s.size() > t.options().hom_cap ) {
			continue;
		}
		if( !usable( t, *other ) ) {
			++skipped;
			continue;
		}
		const auto theirs = n_ideals_of( *other );
		for( const auto & phi : enumerate_good_homomorphisms( r, s ) ) {
			if( scan.done() ) {
				return scan.result();
			}
			if( phi.injective ) {
				for( const auto i2 : theirs ) {
					scan.hit();
					const auto pre = preimage_ideal( phi, r.size(), i2 );
					if( !t.n_ideal( pre ) ) {
						scan.fail( { { "part", 1 }, { "target", s.name() }, { "map", phi.map }, { "I2", js( i2 ) }, { "preimage", js( pre ) } } );
						break;
					}
				}
			}
			if( phi.surjective ) {
				for( const auto i1 : mine ) {
					if( scan.done() || !phi.kernel.subset_of( i1 ) ) {
						continue;
					}
					scan.hit();
					const auto img = image_ideal( phi, i1 );
					if( !Tools::n_ideal_in( *other, img ) ) {
						scan.fail( { { "part", 2 }, { "target", s.name() }, { "map", phi.map }, { "I1", js( i1 ) }, { "image", js( img ) } } );
					}
				}
			}
		}
	}
	if( skipped ) {
		scan.note( std::to_string( skipped ) + " targets outside the standing assumption skipped" );
	}
	return scan.result();
}

Outcome t36( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto & r = t.ring();
	const auto props = t.proper();
	int ill = 0, skipped = 0;
	for( const auto j : props ) {
		std::optional< QuotientRing > q;
		try {
			q = quotient( r, j );
		} catch( const IllDefinedQuotient & ) {
			++ill;
			continue;
		}
		const RingContext qc( q->ring, { std::max( t.options().enumeration_cap, q->ring.size() ) } );
		if( !usable( t, qc ) ) {
			++skipped;
			continue;
		}
		const bool j_n = t.n_ideal( j );
		for( const auto i : props ) {
			if( scan.done() ) {
				return scan.result();
			}
			if( !j.subset_of( i ) ) {
				continue;
			}
			const auto iq = project( q->projection, i );
			const bool i_n = t.n_ideal( i );
			const bool iq_n = Tools::n_ideal_in( qc, iq );
			json w = { { "J", js( j ) }, { "I", js( i ) }, { "I_over_J", js( iq ) } };
			if( i_n ) {
				scan.hit();
				if( !iq_n ) {
					w[ "part" ] = "a";
					scan.fail( w );
				}
			}
			if( iq_n && j.subset_of( t.r0() ) ) {
				scan.hit();
				if( !i_n ) {
					w[ "part" ] = "b";
					scan.fail( w );
				}
			}
			if( j_n && iq_n ) {
				scan.hit();
				if( !i_n ) {
					w[ "part" ] = "c";
					scan.fail( w );
				}
			}
		}
	}
	if( ill ) {
		scan.note( std::to_string( ill ) + " quotients ill-defined" );
	}
	if( skipped ) {
		scan.note( std::to_string( skipped ) + " quotients outside the standing assumption skipped" );
	}
	return scan.result();
}

Outcome t37( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto & r = t.ring();
	for( int n = 1; n <= 2; ++n ) {
		long long carrier = 1;
		for( int k = 0; k < n * n; ++k ) {
			carrier *= r.size();
		}
		if( carrier > t.options().construct_cap ) {
			scan.note( "M" + std::to_string( n ) + " exceeds the construction cap" );
			continue;
		}
		const auto m = matrix_hyperring( r, n, t.options().construct_cap );
		const RingContext mc( m, { std::max( t.options().enumeration_cap, m.size() ) } );
		if( t.rd().is( Axis::standing, 0 ) && !mc.all_ideals_C() ) {
			scan.note( "M" + std::to_string( n ) + " outside the standing assumption" );
			continue;
		}
		for( const auto i : t.ideals() ) {
			const auto mi = matrix_ideal( r, n, i );
			if( !Tools::n_ideal_in( mc, mi ) ) {
				continue;
			}
			scan.hit();
			if( !t.n_ideal( i ) ) {
				scan.fail( { { "n", n }, { "I", js( i ) }, { "Mn_I", js( mi ) } } );
				return scan.result();
			}
		}
	}
	return scan.result();
}

Outcome t38( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto & r = t.ring();
	const auto ns = t.filter( &Tools::n_ideal );
	int skipped = 0;
	for( const auto sub : enumerate_subhyperrings( r ) ) {
		const auto s = subhyperring_restrict( r, sub );
		const RingContext sc( s.ring, { std::max( t.options().enumeration_cap, s.ring.size() ) } );
		if( !usable( t, sc ) ) {
			++skipped;
			continue;
		}
		std::vector< int > index_of( r.size(), -1 );
		for( std::size_t k = 0; k < s.embedding.size(); ++k ) {
			index_of[ s.embedding[ k ] ] = static_cast< int >( k );
		}
		for( const auto i : ns ) {
			if( scan.done() ) {
				return scan.result();
			}
			if( sub.subset_of( i ) ) {
				continue;
			}
			scan.hit();
			ElementSubset local;
			( i & sub ).for_each( [ & ]( Element x ) { local.insert( index_of[ x ] ); } );
			if( !Tools::n_ideal_in( sc, local ) ) {
				scan.fail( { { "T", js( sub ) }, { "I", js( i ) }, { "meet", js( i & sub ) } } );
			}
		}
	}
	if( skipped ) {
		scan.note( std::to_string( skipped ) + " subhyperrings outside the standing assumption skipped" );
	}
	return scan.result();
}

Outcome t39( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto & r = t.ring();
	int skipped = 0;
	for( const auto & other : t.pool().rings ) {
		const auto & s = other->ring();
		if( r.size() * s.size() > t.options().construct_cap || !s.identity() ) {
			continue;
		}
		if( !usable( t, *other ) ) {
			++skipped;
			continue;
		}
		const auto p = direct_product( r, s );
		const RingContext pc( p, { std::max( t.options().enumeration_cap, p.size() ) } );
		if( !usable( t, pc ) ) {
			++skipped;
			continue;
		}
		for( const auto i1 : t.ideals() ) {
			for( const auto i2 : other->ideals() ) {
				if( scan.done() ) {
					return scan.result();
				}
				ElementSubset prod;
				i1.for_each( [ & ]( Element a ) { i2.for_each( [ & ]( Element b ) { prod.insert( pair_index( s, a, b ) ); } ); } );
				if( !Tools::n_ideal_in( pc, prod ) ) {
					continue;
				}
				scan.hit();
				if( prod != p.carrier() ) {
					scan.fail( { { "R2", s.name() }, { "I1", js( i1 ) }, { "I2", js( i2 ) } } );
				}
			}
		}
	}
	if( skipped ) {
		scan.note( std::to_string( skipped ) + " factors outside the standing assumption skipped" );
	}
	return scan.result();
}

Outcome t40( const CheckEnv & env ) {
	Tools t( env );
	Scan scan;
	const auto & r = t.ring();
	if( r.size() > t.options().gamma_cap ) {
		return not_applicable( "carrier exceeds the fundamental-ring cap " + std::to_string( t.options().gamma_cap ) );
	}
	std::optional< FundamentalRingImage > img;
	try {
		img = fundamental_ring( r, t.options().gamma_cap, t.rd().gamma() );
	} catch( const IllDefinedQuotient & e ) {
		scan.hit();
		scan.fail( { { "fundamental_ring", "ill-defined" }, { "representatives", e.representatives } } );
		return scan.result();
	}
	for( const auto i : t.ideals() ) {
		scan.hit();
		const auto image = gamma_image( *img, i );
		const bool lhs = t.n_ideal( i );
		const bool rhs = classical_n_ideal( img->ring, image );
		if( lhs != rhs ) {
			scan.fail( { { "I", js( i ) }, { "n_ideal", lhs }, { "image", js( image ) }, { "classical_n_ideal", rhs }, { "classes", js( img->classes ) } } );
			break;
		}
	}
	return scan.result();
}

std::vector< TheoremEntry > build_registry() {
	using A = Axis;
	std::vector< TheoremEntry > v;
	auto add = [ & ]( std::string id, std::string name, std::string statement, std::vector< Axis > axes, std::function< Outcome( const CheckEnv & ) > f, bool identity = false, bool scalar = false ) {
		v.push_back( { std::move( id ), std::move( name ), std::move( statement ), std::move( axes ), identity, scalar, std::move( f ) } );
	};
	add( "T01", "r-hyperideal product tests",
	    "(1) I r <=> [I1 o I2 <= I, I1 meets V => I2 <= I]; (2) I meets V, I1, I2 r, (I o I1 = I o I2 or I&I1 = I&I2) => I1 = I2; "
	    "(3) J meets V, I o J r => I = I o J, I r",
	    { A::regular, A::product, A::prime }, t01 );
	add( "T02", "r-hyperideal via generated meets and colons", "I r <=> <a> & I = a o I for all a in V <=> (I : a) = I for all a in V - I", { A::regular, A::product, A::prime }, t02 );
	add( "T03", "r-hyperideals closed under intersection", "I, J r => I & J r", { A::prime }, t03 );
	add( "T04", "r-hyperideals consist of zero divisors", "I proper r => I <= Z(R)", { A::prime }, t04 );
	add( "T05", "annihilators are r-hyperideals", "x != 0 => ann(x) r", { A::prime }, t05 );
	add( "T06", "integral hyperdomain via r-hyperideals", "integral <=> {0} is the only proper r <=> ann(x o y) = ann(x) | ann(y) for all x, y", { A::prime }, t06, true );
	add( "T07", "annihilator sum over a splitting of 1", "x + y = 1 => ann(x) + ann(y) r", { A::prime }, t07, true );
	add( "T08a", "minimal nonzero plus annihilator of an idempotent", "R reduced, P minimal nonzero, s idempotent => P + ann(s) r", { A::idempotent, A::prime }, []( const CheckEnv & e ) { return t08( e, false ); }, true );
	add( "T08b", "minimal prime plus annihilator of an idempotent", "R reduced, P minimal prime, s idempotent => P + ann(s) r", { A::idempotent, A::prime }, []( const CheckEnv & e ) { return t08( e, true ); }, true );
	add( "T09", "maximal r-hyperideals are prime", "M maximal among proper r => M prime", { A::prime }, t09 );
	add( "T10", "prime r-hyperideals are the zero-divisor primes", "P prime => (P r <=> P <= Z(R))", { A::prime }, t10 );
	add( "T11", "incomparable primes with r intersection", "P1..Pk pairwise incomparable primes (k <= 3), &Pi r => every Pi r", { A::prime }, t11, true );
	add( "T12", "non-essential r-hyperideals lie in a maximal r minimal prime", "R reduced, I proper r not essential => exists minimal prime P >= I, P maximal proper r", { A::prime }, t12 );
	add( "T13", "r-hyperideal avoidance", "I <= I1 | ... | Ik irredundant (k <= 3), I1 r, others meet V => I <= I1", { A::regular, A::prime }, t13 );
	add( "T14", "prime avoidance with a minimal prime", "I <= P1 | ... | Pk irredundant (k <= 3), P1 minimal prime, others meet V => I <= P1", { A::regular, A::prime }, t14 );
	add( "T15", "r-multiplicative closure of S u T u S o T", "S r-mult closed, T mult closed with a regular element => S | T | S o T r-mult closed", { A::regular, A::r_mult, A::mult_closed }, t15, true );
	add( "T16", "r-hyperideal complements", "I proper: I r <=> R - I r-mult closed", { A::r_mult, A::prime }, t16, true );
	add( "T17", "maximal ideals avoiding an r-multiplicative set", "S r-mult closed, K & S empty, I maximal with K <= I, I & S empty => I r", { A::r_mult, A::prime }, t17, true );
	add( "T18", "n-hyperideals are r-hyperideals", "I n => I r", { A::prime }, t18 );
	add( "T19", "n and r coincide when zero is primary", "{0} primary => (I proper: I n <=> I r)", { A::prime }, t19 );
	add( "T20", "n-hyperideals lie in the nil radical", "I n => I <= r(0)", {}, t20 );
	add( "T21", "n-hyperideals closed under intersection", "I, J n => I & J n", {}, t21 );
	add( "T22", "n-hyperideal characterizations", "I proper: I n <=> (I : a) = I for all a not in r(0) <=> [I1 o I2 <= I, I1 not in r(0) => I2 <= I]", { A::product }, t22 );
	add( "T23", "cancellation for n-hyperideals", "L not inside r(0), I, J n, I o L = J o L => I = J", { A::product }, t23 );
	add( "T24", "prime n-hyperideals", "P prime => (P n <=> P = r(0))", { A::prime }, t24 );
	add( "T25", "r(0) prime iff n", "r(0) prime <=> r(0) n", { A::prime }, t25 );
	add( "T26", "colons of n-hyperideals", "I n, T nonempty, T not inside I => (I : T) n", {}, t26 );
	add( "T27", "maximal n-hyperideal is r(0)", "I maximal among n => I = r(0)", {}, t27 );
	add( "T28", "existence of n-hyperideals", "r(0) prime <=> some n-hyperideal exists", { A::prime }, t28 );
	add( "T29", "n-hyperideal complements", "I n <=> R - I n-mult closed", {}, t29 );
	add( "T30", "maximal ideals avoiding an n-multiplicative set", "S n-mult closed, K & S empty, I maximal with K <= I, I & S empty => I n", {}, t30 );
	add( "T31", "n-hyperideal avoidance", "I <= I1 | ... | Ik (k <= 3), It n, others nil-free, I not inside the others => I <= It", { A::nil_free }, t31 );
	add( "T32", "n-hyperideals of reduced hyperrings", "R reduced: not integral => no n; {0} n <=> integral", {}, t32 );
	add( "T33", "zero as the only n-hyperideal", "n-hyperideals = [{0}] <=> integral", {}, t33 );
	add( "T34", "invertible hyperrings", "R invertible <=> R von Neumann regular and {0} n", { A::invertible }, t34, true );
	add( "T35", "good homomorphisms transport n-hyperideals", "phi injective, I2 n => phi^-1(I2) n; phi surjective, I1 n, Ker <= I1 => phi(I1) n", {}, t35 );
	add( "T36", "quotients and n-hyperideals", "J <= I proper: I n => I/J n; I/J n, J <= r(0) => I n; J n, I/J n => I n", {}, t36 );
	add( "T37", "hypermatrix n-hyperideals", "scalar 1, Mn(I) n in Mn(R) => I n", {}, t37, true, true );
	add( "T38", "subhyperrings and n-hyperideals", "T subhyperring, I n, T not inside I => I & T n in T", {}, t38 );
	add( "T39", "no product n-hyperideals", "I1 x I2 n in R1 x R2 => I1 x I2 = R1 x R2", {}, t39 );
	add( "T40", "n-hyperideals and the fundamental ring", "scalar 1: I n <=> I/gamma* classical n-ideal of R/gamma*", { A::gamma }, t40, true, true );
	return v;
}

} // namespace

const std::vector< TheoremEntry > & registry() {
	static const std::vector< TheoremEntry > r = build_registry();
	return r;
}

const TheoremEntry * find_entry( const std::string & id ) {
	for( const auto & e : registry() ) {
		if( e.id == id ) {
			return &e;
		}
	}
	return nullptr;
}

namespace {

Outcome evaluate( const TheoremEntry & entry, const RingContext & ctx, const Readings & readings, const HarnessOptions & options, const RingPool & pool ) {
	const auto & r = ctx.ring();
	if( !r.commutative() ) {
		return not_applicable( "non-commutative hyperring" );
	}
	if( entry.needs_scalar_identity && !r.scalar_identity() ) {
		return not_applicable( "no scalar identity" );
	}
	if( entry.needs_identity && !r.identity() ) {
		return not_applicable( "no identity" );
	}
	if( readings.is( Axis::standing, 0 ) && !ctx.all_ideals_C() ) {
		return not_applicable( "not every hyperideal is a C-hyperideal" );
	}
	try {
		return entry.check( { ctx, readings, options, pool } );
	} catch( const CapExceeded & e ) {
		return not_applicable( e.what() );
	}
}

} // namespace

TheoremVerdict run_theorem( const TheoremEntry & entry, const RingContext & ctx, const Readings & readings, const HarnessOptions & options, const RingPool & pool ) {
	const auto start = std::chrono::steady_clock::now();
	TheoremVerdict v;
	v.theorem = entry.id;
	v.ring = ctx.ring().name();
	v.readings = readings;
	const auto out = evaluate( entry, ctx, readings, options, pool );
	v.status = out.status;
	v.instances = out.instances;
	v.witness = out.witness;
	v.reason = out.reason;
	if( out.status == Status::counterexample ) {
		const auto fresh = HyperRing::validate( ctx.ring().to_raw(), { .require_commutative = ctx.ring().commutative() } );
		const RingContext again( fresh, { std::max( options.enumeration_cap, fresh.size() ) } );
		const auto re = evaluate( entry, again, readings, options, pool );
		if( re.status != Status::counterexample || re.witness != out.witness ) {
			throw HyperError( entry.id + " on " + v.ring + ": counterexample did not reproduce" );
		}
		v.reverified = true;
	}
	v.wall_ms = std::chrono::duration< double, std::milli >( std::chrono::steady_clock::now() - start ).count();
	return v;
}

SuiteReport run_suite( const std::vector< HyperRing > & corpus, const std::vector< std::string > & filter, const HarnessOptions & options, const Readings * forced ) {
	SuiteReport rep;
	rep.timing = options.timing;
	RingPool pool;
	std::vector< std::shared_ptr< const RingContext > > contexts;
	for( const auto & r : corpus ) {
		rep.corpus.push_back( r.name() );
		if( r.size() > options.enumeration_cap ) {
			contexts.push_back( nullptr );
			continue;
		}
		contexts.push_back( std::make_shared< const RingContext >( r, ContextOptions{ options.enumeration_cap } ) );
		pool.rings.push_back( contexts.back() );
	}
	std::vector< const TheoremEntry * > entries;
	for( const auto & e : registry() ) {
		if( filter.empty() || std::find( filter.begin(), filter.end(), e.id ) != filter.end() ) {
			entries.push_back( &e );
		}
	}
	for( const auto & id : filter ) {
		if( !find_entry( id ) ) {
			throw FormatError( "unknown theorem id '" + id + "'" );
		}
	}
	for( const auto * e : entries ) {
		for( std::size_t idx = 0; idx < corpus.size(); ++idx ) {
			const auto & ctx = contexts[ idx ];
			if( !ctx ) {
				TheoremVerdict v;
				v.theorem = e->id;
				v.ring = corpus[ idx ].name();
				v.readings = forced ? *forced : Readings{};
				v.status = Status::not_applicable;
				v.reason = "carrier " + std::to_string( corpus[ idx ].size() ) + " exceeds the enumeration cap " + std::to_string( options.enumeration_cap );
				++rep.not_applicable;
				rep.verdicts.push_back( std::move( v ) );
				continue;
			}
			std::vector< Readings > readings;
			if( forced ) {
				readings.push_back( *forced );
			} else {
				readings.emplace_back();
				for( const auto a : e->axes ) {
					readings.push_back( Readings{}.flipped( a ) );
				}
				if( !ctx->all_ideals_C() && ctx->ring().commutative() ) {
					readings.push_back( Readings{}.flipped( Axis::standing ) );
				}
			}
			for( std::size_t k = 0; k < readings.size(); ++k ) {
				auto v = run_theorem( *e, *ctx, readings[ k ], options, pool );
				const bool counts = forced || k == 0;
				if( counts ) {
					switch( v.status ) {
					case Status::holds:
						++rep.holds;
						break;
					case Status::counterexample:
						++rep.counterexamples;
						break;
					case Status::not_applicable:
						++rep.not_applicable;
						break;
					}
				} else if( v.status == Status::counterexample ) {
					v.reading_sensitive = true;
					++rep.reading_sensitive;
				}
				const bool stop = counts && options.fail_fast && v.status == Status::counterexample;
				rep.verdicts.push_back( std::move( v ) );
				if( stop ) {
					return rep;
				}
			}
		}
	}
	return rep;
}

namespace {

json verdict_json( const TheoremVerdict & v, bool timing ) {
	json o;
	o[ "theorem" ] = v.theorem;
	o[ "ring" ] = v.ring;
	o[ "reading" ] = v.readings.to_json();
	o[ "status" ] = status_name( v.status );
	if( v.reading_sensitive ) {
		o[ "reading_sensitive" ] = true;
	}
	o[ "instances" ] = v.instances;
	if( !v.witness.is_null() ) {
		o[ "witness" ] = v.witness;
		o[ "reverified" ] = v.reverified;
	}
	if( !v.reason.empty() ) {
		o[ "reason" ] = v.reason;
	}
	if( timing ) {
		o[ "wall_ms" ] = v.wall_ms;
	}
	return o;
}

} // namespace

std::string SuiteReport::to_json() const {
	json doc;
	doc[ "format" ] = "hyperwb-theorem-report";
	doc[ "version" ] = 1;
	doc[ "default_readings" ] = default_readings_json();
	doc[ "corpus" ] = corpus;
	doc[ "summary" ] = { { "holds", holds }, { "counterexamples", counterexamples }, { "not_applicable", not_applicable }, { "reading_sensitive", reading_sensitive } };
		json cx = json::array(), rs = json::array(), all = json::array();
	for( const auto & v : verdicts ) {
		const auto j = verdict_json( v, timing );
		if( v.status == Status::counterexample ) {
			( v.reading_sensitive ? rs : cx ).push_back( j );
		}
		all.push_back( j );
	}
	doc[ "counterexamples" ] = cx;
	doc[ "reading_sensitive" ] = rs;
	doc[ "verdicts" ] = all;
	return doc.dump( 2 ) + "\n";
}

std::string SuiteReport::to_table() const {
	std::ostringstream out;
	struct Row {
		int holds = 0, cx = 0, na = 0, rs = 0;
	};
	std::map< std::string, Row > rows;
	for( const auto & v : verdicts ) {
		auto & row = rows[ v.theorem ];
		if( v.reading_sensitive ) {
			++row.rs;
		} else if( v.readings.is_default() || v.status != Status::counterexample ) {
			if( !v.readings.is_default() ) {
				continue;
			}
			( v.status == Status::holds ? row.holds : v.status == Status::counterexample ? row.cx : row.na )++;
		}
	}
	out << "theorem  holds  counterexample  n/a  reading-sensitive\n";
	for( const auto & [ id, row ] : rows ) {
		char line[ 128 ];
		std::snprintf( line, sizeof line, "%-8s %5d  %14d  %3d  %17d\n", id.c_str(), row.holds, row.cx, row.na, row.rs );
		out << line;
	}
	out << "rings: " << corpus.size() << "  holds: " << holds << "  counterexamples: " << counterexamples << "  not-applicable: " << not_applicable << "  reading-sensitive: " << reading_sensitive << "\n";
	for( const auto & v : verdicts ) {
		if( v.status == Status::counterexample ) {
			out << ( v.reading_sensitive ? "reading-sensitive " : "COUNTEREXAMPLE " ) << v.theorem << " on " << v.ring << " [" << v.readings.label() << "]: " << v.witness.dump() << "\n";
		}
	}
	return out.str();
}

} // namespace hyperwb
