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

#include "hyperwb/classify.hpp"

#include <algorithm>

namespace hyperwb {

std::optional< std::pair< Element, Element > > prime_failure( const HyperRing & r, ElementSubset p ) {
	for( Element x = 0; x < r.size(); ++x ) {
		if( p.contains( x ) ) {
			continue;
		}
		for( Element y = 0; y < r.size(); ++y ) {
			if( !p.contains( y ) && r.mul( x, y ).subset_of( p ) ) {
				return std::make_pair( x, y );
			}
		}
	}
	return std::nullopt;
}

RingContext::RingContext( HyperRing ring, ContextOptions options ) : ring_( std::move( ring ) ) {
	ideals_ = hyperideal_members( ring_, options.enumeration_cap );
	ideal_set_.insert( ideals_.begin(), ideals_.end() );
	product_class_ = hyperwb::product_class( ring_ );
	all_C_ = std::all_of( ideals_.begin(), ideals_.end(), [ this ]( ElementSubset i ) { return is_C( i ); } );
	classes_ = element_classes( ring_ );
	flags_ = classify_ring( ring_ );
	r0_ = ring_.carrier();
	for( const auto i : ideals_ ) {
		if( i != ring_.carrier() && !prime_failure( ring_, i ) ) {
			primes_.push_back( i );
			r0_ &= i;
		}
	}
}

bool RingContext::is_prime_ideal( ElementSubset p ) const {
	return std::find( primes_.begin(), primes_.end(), p ) != primes_.end();
}

ElementSubset RingContext::radical( ElementSubset i ) const {
	ElementSubset out = ring_.carrier();
	for( const auto p : primes_ ) {
		if( i.subset_of( p ) ) {
			out &= p;
		}
	}
	return out;
}

namespace {

bool nonzero( ElementSubset s ) {
	return !( s - ElementSubset::singleton( 0 ) ).empty();
}

} // namespace

Check is_prime( const RingContext & ctx, ElementSubset i, PrimeMode mode ) {
	if( i == ctx.carrier() || ( mode == PrimeMode::strict && !nonzero( i ) ) ) {
		return Check::fail();
	}
	if( const auto w = prime_failure( ctx.ring(), i ) ) {
		return Check::fail( { w->first, w->second } );
	}
	return Check::pass();
}

Check is_primary( const RingContext & ctx, ElementSubset i, PrimeMode mode ) {
	if( i == ctx.carrier() || ( mode == PrimeMode::strict && !nonzero( i ) ) ) {
		return Check::fail();
	}
	const auto & r = ctx.ring();
	const auto rad = ctx.radical( i );
	for( Element x = 0; x < r.size(); ++x ) {
		if( i.contains( x ) ) {
			continue;
		}
		for( Element y = 0; y < r.size(); ++y ) {
			if( !rad.contains( y ) && r.mul( x, y ).subset_of( i ) ) {
				return Check::fail( { x, y } );
			}
		}
	}
	return Check::pass();
}

Check is_r_hyperideal( const RingContext & ctx, ElementSubset i, PrimeMode mode ) {
	if( mode == PrimeMode::strict && i == ctx.carrier() ) {
		return Check::fail();
	}
	const auto & r = ctx.ring();
	std::optional< Check > out;
	ctx.elements().nzd.for_each( [ & ]( Element x ) {
		if( out ) {
			return;
		}
		for( Element y = 0; y < r.size(); ++y ) {
			if( !i.contains( y ) && r.mul( x, y ).subset_of( i ) ) {
				out = Check::fail( { x, y } );
				return;
			}
		}
	} );
	return out.value_or( Check::pass() );
}

Check is_n_hyperideal( const RingContext & ctx, ElementSubset i ) {
	if( i == ctx.carrier() ) {
		return Check::fail();
	}
	const auto & r = ctx.ring();
	const auto rad = ctx.nil_radical();
	for( Element x = 0; x < r.size(); ++x ) {
		if( rad.contains( x ) ) {
			continue;
		}
		for( Element y = 0; y < r.size(); ++y ) {
			if( !i.contains( y ) && r.mul( x, y ).subset_of( i ) ) {
				return Check::fail( { x, y } );
			}
		}
	}
	return Check::pass();
}

namespace {

bool in_class( const RingContext & ctx, ElementSubset i, IdealClass cls ) {
	if( i == ctx.carrier() ) {
		return false;
	}
	switch( cls ) {
	case IdealClass::hyperideal:
		return true;
	case IdealClass::prime:
		return ctx.is_prime_ideal( i );
	case IdealClass::r_ideal:
		return static_cast< bool >( is_r_hyperideal( ctx, i ) );
	case IdealClass::n_ideal:
		return static_cast< bool >( is_n_hyperideal( ctx, i ) );
	}
	return false;
}

} // namespace

bool is_maximal_in_class( const RingContext & ctx, ElementSubset i, IdealClass cls ) {
	if( !in_class( ctx, i, cls ) ) {
		return false;
	}
	return std::none_of( ctx.ideals().begin(), ctx.ideals().end(), [ & ]( ElementSubset j ) {
		return j != i && i.subset_of( j ) && in_class( ctx, j, cls );
	} );
}

bool is_minimal( const RingContext & ctx, ElementSubset i ) {
	if( !ctx.is_ideal( i ) || !nonzero( i ) ) {
		return false;
	}
	return std::none_of( ctx.ideals().begin(), ctx.ideals().end(), [ & ]( ElementSubset j ) {
		return j != i && j.subset_of( i ) && nonzero( j );
	} );
}

bool is_minimal_prime( const RingContext & ctx, ElementSubset i ) {
	if( !ctx.is_prime_ideal( i ) ) {
		return false;
	}
	return std::none_of( ctx.primes().begin(), ctx.primes().end(), [ & ]( ElementSubset p ) {
		return p != i && p.subset_of( i );
	} );
}

bool is_essential( const RingContext & ctx, ElementSubset i ) {
	if( !ctx.is_ideal( i ) || !nonzero( i ) ) {
		return false;
	}
	return std::all_of( ctx.ideals().begin(), ctx.ideals().end(), [ & ]( ElementSubset j ) {
		return !nonzero( j ) || nonzero( i & j );
	} );
}

Check is_r_mult_closed( const RingContext & ctx, ElementSubset s, RMultReading reading ) {
	const auto e = ctx.identity();
	if( !e ) {
		throw NoIdentity();
	}
	if( s.empty() || !s.contains( *e ) || s.contains( 0 ) ) {
		return Check::fail();
	}
	const auto nzd = ctx.elements().nzd;
	if( reading == RMultReading::literal ) {
		if( ( ( nzd & s ) - ElementSubset::singleton( *e ) ).empty() ) {
			return Check::fail();
		}
	} else if( !nzd.subset_of( s ) ) {
		return Check::fail( { ( nzd - s ).min() } );
	}
	const auto & r = ctx.ring();
	std::optional< Check > out;
	( nzd & s ).for_each( [ & ]( Element x ) {
		s.for_each( [ & ]( Element a ) {
			if( !out && !r.mul( x, a ).subset_of( s ) ) {
				out = Check::fail( { x, a } );
			}
		} );
	} );
	return out.value_or( Check::pass() );
}

Check is_n_mult_closed( const RingContext & ctx, ElementSubset s ) {
	const auto outside = ctx.carrier() - ctx.nil_radical();
	if( s.empty() ) {
		return Check::fail();
	}
	if( !outside.subset_of( s ) ) {
		return Check::fail( { ( outside - s ).min() } );
	}
	const auto & r = ctx.ring();
	std::optional< Check > out;
	outside.for_each( [ & ]( Element a ) {
		s.for_each( [ & ]( Element b ) {
			if( !out && !r.mul( a, b ).subset_of( s ) ) {
				out = Check::fail( { a, b } );
			}
		} );
	} );
	return out.value_or( Check::pass() );
}

std::vector< ElementSubset > maximal_disjoint_ideals( const RingContext & ctx, ElementSubset s, ElementSubset k ) {
	if( s.intersects( k ) ) {
		throw NotDisjoint( "hyperideal " + k.to_string() + " meets " + s.to_string() );
	}
	std::vector< ElementSubset > candidates;
	for( const auto i : ctx.ideals() ) {
		if( k.subset_of( i ) && !i.intersects( s ) ) {
			candidates.push_back( i );
		}
	}
	std::vector< ElementSubset > out;
	for( const auto i : candidates ) {
		const bool dominated = std::any_of( candidates.begin(), candidates.end(), [ i ]( ElementSubset j ) {
			return j != i && i.subset_of( j );
		} );
		if( !dominated ) {
			out.push_back( i );
		}
	}
	return out;
}

ElementSubset maximal_disjoint_ideal( const RingContext & ctx, ElementSubset s, ElementSubset k ) {
	const auto all = maximal_disjoint_ideals( ctx, s, k );
	if( all.empty() ) {
		throw NotDisjoint( "no hyperideal contains " + k.to_string() + " while avoiding " + s.to_string() );
	}
	return all.front();
}

ClassificationFlags classify_ideal( const RingContext & ctx, ElementSubset i, PrimeMode mode ) {
	ClassificationFlags f;
	f.proper = i != ctx.carrier();
	f.c_ideal = ctx.is_C( i );
	auto record = [ &f ]( const char * name, const Check & c ) {
		if( !c && !c.witness.empty() ) {
			f.witnesses[ name ] = c.witness;
		}
		return c.holds;
	};
	f.prime = record( "prime", is_prime( ctx, i, mode ) );
	f.primary = record( "primary", is_primary( ctx, i, mode ) );
	f.maximal = is_maximal_in_class( ctx, i, IdealClass::hyperideal );
	f.minimal_nonzero = is_minimal( ctx, i );
	f.minimal_prime = is_minimal_prime( ctx, i );
	f.essential = is_essential( ctx, i );
	f.r_ideal = record( "r_ideal", is_r_hyperideal( ctx, i, mode ) );
	f.n_ideal = record( "n_ideal", is_n_hyperideal( ctx, i ) );
	return f;
}

} // namespace hyperwb
