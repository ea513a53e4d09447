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

#include "hyperwb/ideals.hpp"

#include <algorithm>
#include <unordered_set>

#include "hyperwb/classify.hpp"

namespace hyperwb {

namespace {

/// Union of r o a and a o r over all r.
ElementSubset absorbed( const HyperRing & r, Element a ) {
	const auto single = ElementSubset::singleton( a );
	return r.product( r.carrier(), single ) | r.product( single, r.carrier() );
}

void require_nonempty( ElementSubset s, const char * op ) {
	if( s.empty() ) {
		throw EmptySet( std::string( op ) + " requires a nonempty subset" );
	}
}

} // namespace

bool is_hyperideal( const HyperRing & r, ElementSubset s ) {
	require_nonempty( s, "is_hyperideal" );
	bool ok = true;
	s.for_each( [ & ]( Element a ) {
		if( !ok ) {
			return;
		}
		if( !absorbed( r, a ).subset_of( s ) ) {
			ok = false;
			return;
		}
		s.for_each( [ & ]( Element b ) {
			if( !s.contains( r.sub( a, b ) ) ) {
				ok = false;
			}
		} );
	} );
	return ok;
}

ElementSubset additive_closure( const HyperRing & r, ElementSubset s ) {
	require_nonempty( s, "additive_closure" );
	ElementSubset cur = s;
	for( ;; ) {
		ElementSubset next = cur;
		cur.for_each( [ & ]( Element a ) {
			cur.for_each( [ & ]( Element b ) { next.insert( r.sub( a, b ) ); } );
		} );
		if( next == cur ) {
			return cur;
		}
		cur = next;
	}
}

ElementSubset generated_ideal( const HyperRing & r, ElementSubset gens ) {
	require_nonempty( gens, "generated_ideal" );
	ElementSubset cur = gens;
	for( ;; ) {
		ElementSubset next = cur;
		cur.for_each( [ & ]( Element a ) {
			next |= absorbed( r, a );
			cur.for_each( [ & ]( Element b ) { next.insert( r.sub( a, b ) ); } );
		} );
		if( next == cur ) {
			return cur;
		}
		cur = next;
	}
}

std::vector< ElementSubset > hyperideal_members( const HyperRing & r, int cap ) {
	if( r.size() > cap ) {
		throw CapExceeded( "hyperideal enumeration of a carrier of size " + std::to_string( r.size() ), cap );
	}
	std::vector< ElementSubset > principal;
	for( Element x = 0; x < r.size(); ++x ) {
		const auto p = generated_ideal( r, ElementSubset::singleton( x ) );
		if( std::find( principal.begin(), principal.end(), p ) == principal.end() ) {
			principal.push_back( p );
		}
	}
	std::unordered_set< ElementSubset > seen( principal.begin(), principal.end() );
	std::vector< ElementSubset > all( principal.begin(), principal.end() );
	for( std::size_t k = 0; k < all.size(); ++k ) {
		for( const auto p : principal ) {
			const auto cur = all[ k ];
			if( p.subset_of( cur ) ) {
				continue;
			}
			const auto joined = generated_ideal( r, cur | p );
			if( seen.insert( joined ).second ) {
				all.push_back( joined );
			}
		}
	}
	std::sort( all.begin(), all.end(), ElementSubset::canonical_less );
	return all;
}

std::vector< ElementSubset > product_class( const HyperRing & r ) {
	std::unordered_set< ElementSubset > seen;
	std::vector< ElementSubset > work;
	for( Element a = 0; a < r.size(); ++a ) {
		for( Element b = 0; b < r.size(); ++b ) {
			if( seen.insert( r.mul( a, b ) ).second ) {
				work.push_back( r.mul( a, b ) );
			}
		}
	}
	for( std::size_t k = 0; k < work.size(); ++k ) {
		for( Element x = 0; x < r.size(); ++x ) {
			const auto single = ElementSubset::singleton( x );
			for( const auto next : { r.product( work[ k ], single ), r.product( single, work[ k ] ) } ) {
				if( seen.insert( next ).second ) {
					work.push_back( next );
				}
			}
		}
	}
	std::sort( work.begin(), work.end(), ElementSubset::canonical_less );
	return work;
}

bool is_C_hyperideal( const std::vector< ElementSubset > & cls, ElementSubset i ) {
	return std::all_of( cls.begin(), cls.end(), [ i ]( ElementSubset a ) { return !a.intersects( i ) || a.subset_of( i ); } );
}

bool is_C_hyperideal( const HyperRing & r, ElementSubset i ) {
	return is_C_hyperideal( product_class( r ), i );
}

IdealProfile make_profile( const HyperRing & r, ElementSubset members, const std::vector< ElementSubset > & cls ) {
	IdealProfile p;
	p.members = members;
	p.is_hyperideal = !members.empty() && is_hyperideal( r, members );
	p.is_C = p.is_hyperideal && is_C_hyperideal( cls, members );
	p.is_proper = members != r.carrier();
	return p;
}

std::vector< IdealProfile > enumerate_hyperideals( const HyperRing & r, int cap ) {
	const auto members = hyperideal_members( r, cap );
	const auto cls = product_class( r );
	std::vector< IdealProfile > out;
	out.reserve( members.size() );
	for( const auto m : members ) {
		out.push_back( make_profile( r, m, cls ) );
	}
	return out;
}

namespace {

IdealProfile close_if_needed( const HyperRing & r, ElementSubset raw, const char * op ) {
	IdealProfile p;
	p.members = raw;
	p.is_proper = raw != r.carrier();
	if( is_hyperideal( r, raw ) ) {
		p.is_hyperideal = true;
		return p;
	}
	p.members = generated_ideal( r, raw );
	p.is_hyperideal = true;
	p.is_proper = p.members != r.carrier();
	p.repaired = true;
	p.diagnostic = std::string( op ) + " " + raw.to_string() + " is not a hyperideal; replaced by generated " + p.members.to_string();
	return p;
}

} // namespace

IdealProfile ideal_sum( const HyperRing & r, ElementSubset i, ElementSubset j ) {
	auto p = close_if_needed( r, r.sum( i, j ), "sum" );
	p.is_C = is_C_hyperideal( r, p.members );
	return p;
}

IdealProfile ideal_product( const HyperRing & r, ElementSubset i, ElementSubset j ) {
	auto p = close_if_needed( r, additive_closure( r, r.product( i, j ) ), "product" );
	p.is_C = is_C_hyperideal( r, p.members );
	return p;
}

IdealProfile ideal_intersection( const HyperRing & r, ElementSubset i, ElementSubset j ) {
	return make_profile( r, i & j, product_class( r ) );
}

ElementSubset colon( const HyperRing & r, ElementSubset i, ElementSubset j ) {
	ElementSubset out;
	for( Element x = 0; x < r.size(); ++x ) {
		if( r.product( ElementSubset::singleton( x ), j ).subset_of( i ) ) {
			out.insert( x );
		}
	}
	return out;
}

ElementSubset radical( const HyperRing & r, ElementSubset i, int cap ) {
	ElementSubset out = r.carrier();
	for( const auto p : hyperideal_members( r, cap ) ) {
		if( i.subset_of( p ) && p != r.carrier() && !prime_failure( r, p ) ) {
			out &= p;
		}
	}
	return out;
}

ElementSubset radical_via_powers( const HyperRing & r, ElementSubset i ) {
	ElementSubset out;
	for( Element x = 0; x < r.size(); ++x ) {
		const auto single = ElementSubset::singleton( x );
		ElementSubset acc = single;
		for( int k = 1; k <= power_bound( r ); ++k ) {
			if( acc.subset_of( i ) ) {
				out.insert( x );
				break;
			}
			acc = r.product( acc, single );
		}
	}
	return out;
}

} // namespace hyperwb
