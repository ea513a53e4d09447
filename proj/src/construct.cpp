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

#include "hyperwb/construct.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace hyperwb {

namespace {

class DisjointSet {
public:
	explicit DisjointSet( int n ) : parent_( n ) { std::iota( parent_.begin(), parent_.end(), 0 ); }

	int find( int x ) {
		while( parent_[ x ] != x ) {
			parent_[ x ] = parent_[ parent_[ x ] ];
			x = parent_[ x ];
		}
		return x;
	}

	void unite( int a, int b ) {
		a = find( a );
		b = find( b );
		if( a != b ) {
			parent_[ std::max( a, b ) ] = std::min( a, b );
		}
	}

private:
	std::vector< int > parent_;
};

/// Labels each part by its least member; part 0 contains 0.
std::vector< ElementSubset > parts_by_min( const std::vector< Element > & label_of, int n ) {
	std::vector< ElementSubset > parts;
	std::vector< int > relabel( n, -1 );
	for( Element x = 0; x < n; ++x ) {
		const int l = label_of[ x ];
		if( relabel[ l ] < 0 ) {
			relabel[ l ] = static_cast< int >( parts.size() );
			parts.emplace_back();
		}
		parts[ relabel[ l ] ].insert( x );
	}
	return parts;
}

std::vector< Element > projection_of( const std::vector< ElementSubset > & parts, int n ) {
	std::vector< Element > proj( n );
	for( std::size_t c = 0; c < parts.size(); ++c ) {
		parts[ c ].for_each( [ & ]( Element x ) { proj[ x ] = static_cast< Element >( c ); } );
	}
	return proj;
}

/**
 * Lifts + and o of r to the partition. Every pair of representatives must
 * give the same class set; o lands in a set of classes, + in one class.
 */
RawTables lift_tables( const HyperRing & r, const std::vector< ElementSubset > & parts, const std::vector< Element > & proj, bool singleton_products, const char * what ) {
	const int m = static_cast< int >( parts.size() );
	RawTables raw;
	raw.size = m;
	raw.add.assign( m, std::vector< int >( m ) );
	raw.hmul.assign( m, std::vector< std::vector< int > >( m ) );
	for( int c = 0; c < m; ++c ) {
		for( int d = 0; d < m; ++d ) {
			const Element x0 = parts[ c ].min();
			const Element y0 = parts[ d ].min();
			const Element sum0 = proj[ r.add( x0, y0 ) ];
			const ElementSubset prod0 = project( proj, r.mul( x0, y0 ) );
			if( singleton_products && !prod0.is_singleton() ) {
				throw IllDefinedQuotient( std::string( what ) + " product", { x0, y0 } );
			}
			parts[ c ].for_each( [ & ]( Element x ) {
				parts[ d ].for_each( [ & ]( Element y ) {
					if( proj[ r.add( x, y ) ] != sum0 ) {
						throw IllDefinedQuotient( std::string( what ) + " sum", { x0, y0, x, y } );
					}
					if( project( proj, r.mul( x, y ) ) != prod0 ) {
						throw IllDefinedQuotient( std::string( what ) + " product", { x0, y0, x, y } );
					}
				} );
			} );
			raw.add[ c ][ d ] = sum0;
			raw.hmul[ c ][ d ] = prod0.to_vector();
		}
	}
	return raw;
}

} // namespace

ElementSubset project( const std::vector< Element > & projection, ElementSubset s ) {
	ElementSubset out;
	s.for_each( [ & ]( Element x ) { out.insert( projection[ x ] ); } );
	return out;
}

QuotientRing quotient( const HyperRing & r, ElementSubset j ) {
	if( j.empty() || !is_hyperideal( r, j ) ) {
		throw NotClosed( "quotient by " + j.to_string() + ": not a hyperideal", {} );
	}
	std::vector< Element > label( r.size() );
	for( Element x = 0; x < r.size(); ++x ) {
		// coset x + J labelled by its least member
		Element least = x;
		j.for_each( [ & ]( Element t ) { least = std::min( least, r.add( x, t ) ); } );
		label[ x ] = least;
	}
	QuotientRing q{ r, {}, parts_by_min( label, r.size() ) };
	q.projection = projection_of( q.cosets, r.size() );
	RawTables raw = lift_tables( r, q.cosets, q.projection, false, "quotient" );
	raw.name = r.name() + "/" + j.to_string();
	raw.construction = "quotient";
	raw.source = r.name();
	q.ring = HyperRing::validate( raw, { .require_commutative = r.commutative() } );
	return q;
}

HyperRing direct_product( const HyperRing & r1, const HyperRing & r2 ) {
	const int n2 = r2.size();
	const int n = r1.size() * n2;
	if( n > kMaxCarrier ) {
		throw CapExceeded( "direct product carrier", kMaxCarrier );
	}
	RawTables raw;
	raw.name = r1.name() + "x" + r2.name();
	raw.construction = "product";
	raw.source = r1.name() + "," + r2.name();
	raw.size = n;
	raw.add.assign( n, std::vector< int >( n ) );
	raw.hmul.assign( n, std::vector< std::vector< int > >( n ) );
	for( int x = 0; x < n; ++x ) {
		for( int y = 0; y < n; ++y ) {
			const int a1 = x / n2, a2 = x % n2, b1 = y / n2, b2 = y % n2;
			raw.add[ x ][ y ] = r1.add( a1, b1 ) * n2 + r2.add( a2, b2 );
			auto & cell = raw.hmul[ x ][ y ];
			r1.mul( a1, b1 ).for_each( [ & ]( Element c1 ) {
				r2.mul( a2, b2 ).for_each( [ & ]( Element c2 ) { cell.push_back( c1 * n2 + c2 ); } );
			} );
			std::sort( cell.begin(), cell.end() );
		}
	}
	return HyperRing::validate( raw, { .require_commutative = r1.commutative() && r2.commutative() } );
}

Element matrix_index( const HyperRing & r, const std::vector< Element > & entries ) {
	Element idx = 0;
	for( Element e : entries ) {
		idx = idx * r.size() + e;
	}
	return idx;
}

std::vector< Element > matrix_entries( const HyperRing & r, int n, Element index ) {
	std::vector< Element > entries( n * n );
	for( int k = n * n - 1; k >= 0; --k ) {
		entries[ k ] = index % r.size();
		index /= r.size();
	}
	return entries;
}

ElementSubset matrix_ideal( const HyperRing & r, int n, ElementSubset i ) {
	int total = 1;
	for( int k = 0; k < n * n; ++k ) {
		total *= r.size();
	}
	ElementSubset out;
	for( Element m = 0; m < total; ++m ) {
		const auto entries = matrix_entries( r, n, m );
		if( std::all_of( entries.begin(), entries.end(), [ i ]( Element e ) { return i.contains( e ); } ) ) {
			out.insert( m );
		}
	}
	return out;
}

Element matrix_corner( const HyperRing & r, int n, Element x ) {
	std::vector< Element > entries( n * n, 0 );
	entries[ 0 ] = x;
	return matrix_index( r, entries );
}

HyperRing matrix_hyperring( const HyperRing & r, int n, int cap ) {
	if( n < 1 || n > 2 ) {
		throw DimensionMismatch( "hypermatrix dimension must be 1 or 2" );
	}
	if( !r.scalar_identity() ) {
		throw NoIdentity();
	}
	long long total = 1;
	for( int k = 0; k < n * n; ++k ) {
		total *= r.size();
		if( total > cap || total > kMaxCarrier ) {
			throw CapExceeded( "hypermatrix carrier", std::min( cap, kMaxCarrier ) );
		}
	}
	const int m = static_cast< int >( total );
	std::vector< std::vector< Element > > entries( m );
	for( Element x = 0; x < m; ++x ) {
		entries[ x ] = matrix_entries( r, n, x );
	}
	RawTables raw;
	raw.name = "M" + std::to_string( n ) + "(" + r.name() + ")";
	raw.construction = "matrix";
	raw.source = r.name();
	raw.size = m;
	raw.add.assign( m, std::vector< int >( m ) );
	raw.hmul.assign( m, std::vector< std::vector< int > >( m ) );
	for( Element x = 0; x < m; ++x ) {
		for( Element y = 0; y < m; ++y ) {
			std::vector< Element > s( n * n );
			std::vector< ElementSubset > cell( n * n );
			for( int i = 0; i < n; ++i ) {
				for( int k = 0; k < n; ++k ) {
					s[ i * n + k ] = r.add( entries[ x ][ i * n + k ], entries[ y ][ i * n + k ] );
					ElementSubset acc = ElementSubset::singleton( 0 );
					for( int j = 0; j < n; ++j ) {
						acc = r.sum( acc, r.mul( entries[ x ][ i * n + j ], entries[ y ][ j * n + k ] ) );
					}
					cell[ i * n + k ] = acc;
				}
			}
			raw.add[ x ][ y ] = matrix_index( r, s );
			// every matrix with entry k drawn from cell[k]
			std::vector< Element > choice( n * n );
			auto & out = raw.hmul[ x ][ y ];
			auto rec = [ & ]( auto && self, int k ) -> void {
				if( k == n * n ) {
					out.push_back( matrix_index( r, choice ) );
					return;
				}
				cell[ k ].for_each( [ & ]( Element e ) {
					choice[ k ] = e;
					self( self, k + 1 );
				} );
			};
			rec( rec, 0 );
			std::sort( out.begin(), out.end() );
		}
	}
	return HyperRing::validate( raw, { .require_commutative = false } );
}

GoodHomomorphism check_good_homomorphism( const std::vector< Element > & map, const HyperRing & r1, const HyperRing & r2 ) {
	if( static_cast< int >( map.size() ) != r1.size() ) {
		throw DimensionMismatch( "map has " + std::to_string( map.size() ) + " entries, source has " + std::to_string( r1.size() ) );
	}
	for( Element v : map ) {
		if( v < 0 || v >= r2.size() ) {
			throw DimensionMismatch( "map value " + std::to_string( v ) + " out of range" );
		}
	}
	for( Element x = 0; x < r1.size(); ++x ) {
		for( Element y = 0; y < r1.size(); ++y ) {
			if( map[ r1.add( x, y ) ] != r2.add( map[ x ], map[ y ] ) ) {
				throw NotHomomorphism( "additive", x, y );
			}
		}
	}
	for( Element x = 0; x < r1.size(); ++x ) {
		for( Element y = 0; y < r1.size(); ++y ) {
			if( project( map, r1.mul( x, y ) ) != r2.mul( map[ x ], map[ y ] ) ) {
				throw NotHomomorphism( "multiplicative", x, y );
			}
		}
	}
	GoodHomomorphism phi;
	phi.map = map;
	ElementSubset image;
	for( Element x = 0; x < r1.size(); ++x ) {
		if( map[ x ] == 0 ) {
			phi.kernel.insert( x );
		}
		image.insert( map[ x ] );
	}
	phi.injective = phi.kernel == ElementSubset::singleton( 0 );
	phi.surjective = image == r2.carrier();
	return phi;
}

std::vector< GoodHomomorphism > enumerate_good_homomorphisms( const HyperRing & r1, const HyperRing & r2 ) {
	const int n = r1.size();
	std::vector< Element > map( n, -1 );
	std::vector< GoodHomomorphism > out;
	map[ 0 ] = 0;

	// Consistency of everything assigned so far.
	auto consistent = [ & ]( Element x ) {
		for( Element y = 0; y < n; ++y ) {
			if( map[ y ] < 0 ) {
				continue;
			}
			for( const auto & [ a, b ] : { std::pair{ x, y }, std::pair{ y, x } } ) {
				const Element s = r1.add( a, b );
				if( map[ s ] >= 0 && map[ s ] != r2.add( map[ a ], map[ b ] ) ) {
					return false;
				}
				const auto prod = r1.mul( a, b );
				bool all_known = true;
				prod.for_each( [ & ]( Element z ) { all_known = all_known && map[ z ] >= 0; } );
				if( all_known && project( map, prod ) != r2.mul( map[ a ], map[ b ] ) ) {
					return false;
				}
			}
		}
		return true;
	};

	auto rec = [ & ]( auto && self, Element x ) -> void {
		if( x == n ) {
			out.push_back( check_good_homomorphism( map, r1, r2 ) );
			return;
		}
		// x = a + b with both assigned forces the image
		for( Element a = 1; a < x; ++a ) {
			const Element b = r1.sub( x, a );
			if( b < x && map[ b ] >= 0 ) {
				map[ x ] = r2.add( map[ a ], map[ b ] );
				if( consistent( x ) ) {
					self( self, x + 1 );
				}
				map[ x ] = -1;
				return;
			}
		}
		for( Element v = 0; v < r2.size(); ++v ) {
			map[ x ] = v;
			if( consistent( x ) ) {
				self( self, x + 1 );
			}
		}
		map[ x ] = -1;
	};
	if( consistent( 0 ) ) {
		rec( rec, 1 );
	}
	return out;
}

ElementSubset image_ideal( const GoodHomomorphism & phi, ElementSubset i1 ) {
	return project( phi.map, i1 );
}

ElementSubset preimage_ideal( const GoodHomomorphism & phi, int source_size, ElementSubset i2 ) {
	ElementSubset out;
	for( Element x = 0; x < source_size; ++x ) {
		if( i2.contains( phi.map[ x ] ) ) {
			out.insert( x );
		}
	}
	return out;
}

namespace {

/// First (a, b) with a in t, b in t and a - b or a o b escaping t.
std::optional< std::vector< int > > subring_escape( const HyperRing & r, ElementSubset t ) {
	std::optional< std::vector< int > > out;
	t.for_each( [ & ]( Element a ) {
		t.for_each( [ & ]( Element b ) {
			if( !out && ( !t.contains( r.sub( a, b ) ) || !r.mul( a, b ).subset_of( t ) ) ) {
				out = std::vector< int >{ a, b };
			}
		} );
	} );
	return out;
}

ElementSubset generated_subring( const HyperRing & r, ElementSubset gens ) {
	ElementSubset cur = gens;
	for( ;; ) {
		ElementSubset next = cur;
		cur.for_each( [ & ]( Element a ) {
			cur.for_each( [ & ]( Element b ) {
				next.insert( r.sub( a, b ) );
				next |= r.mul( a, b );
			} );
		} );
		if( next == cur ) {
			return cur;
		}
		cur = next;
	}
}

} // namespace

Subring subhyperring_restrict( const HyperRing & r, ElementSubset t ) {
	if( t.empty() ) {
		throw NotClosed( "empty subset", {} );
	}
	if( const auto w = subring_escape( r, t ) ) {
		throw NotClosed( "subset " + t.to_string(), *w );
	}
	Subring s{ r, t.to_vector() };
	const int m = static_cast< int >( s.embedding.size() );
	std::vector< int > index_of( r.size(), -1 );
	for( int k = 0; k < m; ++k ) {
		index_of[ s.embedding[ k ] ] = k;
	}
	RawTables raw;
	raw.name = r.name() + "|" + t.to_string();
	raw.construction = "subring";
	raw.source = r.name();
	raw.size = m;
	raw.add.assign( m, std::vector< int >( m ) );
	raw.hmul.assign( m, std::vector< std::vector< int > >( m ) );
	for( int a = 0; a < m; ++a ) {
		for( int b = 0; b < m; ++b ) {
			raw.add[ a ][ b ] = index_of[ r.add( s.embedding[ a ], s.embedding[ b ] ) ];
			r.mul( s.embedding[ a ], s.embedding[ b ] ).for_each( [ & ]( Element z ) { raw.hmul[ a ][ b ].push_back( index_of[ z ] ); } );
		}
	}
	s.ring = HyperRing::validate( raw, { .require_commutative = r.commutative() } );
	return s;
}

std::vector< ElementSubset > enumerate_subhyperrings( const HyperRing & r ) {
	std::vector< ElementSubset > principal;
	for( Element x = 0; x < r.size(); ++x ) {
		const auto p = generated_subring( r, ElementSubset::singleton( x ) );
		if( std::find( principal.begin(), principal.end(), p ) == principal.end() ) {
			principal.push_back( p );
		}
	}
	std::unordered_set< ElementSubset > seen( principal.begin(), principal.end() );
	std::vector< ElementSubset > all = principal;
	for( std::size_t k = 0; k < all.size(); ++k ) {
		for( const auto p : principal ) {
			const auto cur = all[ k ];
			if( p.subset_of( cur ) ) {
				continue;
			}
			const auto joined = generated_subring( r, cur | p );
			if( seen.insert( joined ).second ) {
				all.push_back( joined );
			}
		}
	}
	std::sort( all.begin(), all.end(), ElementSubset::canonical_less );
	return all;
}

std::vector< ElementSubset > sums_of_products( const HyperRing & r, GammaReading reading ) {
	// seeds: one-factor products {a} and every member of C
	std::vector< ElementSubset > seeds;
	for( Element a = 0; a < r.size(); ++a ) {
		seeds.push_back( ElementSubset::singleton( a ) );
	}
	for( const auto c : product_class( r ) ) {
		if( std::find( seeds.begin(), seeds.end(), c ) == seeds.end() ) {
			seeds.push_back( c );
		}
	}
	std::unordered_set< ElementSubset > seen;
	std::vector< ElementSubset > family;
	if( reading == GammaReading::free_sums ) {
		for( const auto s : seeds ) {
			if( seen.insert( s ).second ) {
				family.push_back( s );
			}
		}
		for( std::size_t k = 0; k < family.size(); ++k ) {
			for( std::size_t j = 0; j <= k; ++j ) {
				const auto s = r.sum( family[ k ], family[ j ] );
				if( seen.insert( s ).second ) {
					family.push_back( s );
				}
			}
		}
	} else {
		for( const auto s : seeds ) {
			const std::size_t before = family.size();
			for( std::size_t k = 0; k < before; ++k ) {
				const auto t = r.sum( family[ k ], s );
				if( seen.insert( t ).second ) {
					family.push_back( t );
				}
			}
			if( seen.insert( s ).second ) {
				family.push_back( s );
			}
		}
	}
	std::sort( family.begin(), family.end(), ElementSubset::canonical_less );
	return family;
}

FundamentalRingImage fundamental_ring( const HyperRing & r, int cap, GammaReading reading ) {
	if( r.size() > cap ) {
		throw CapExceeded( "fundamental ring of a carrier of size " + std::to_string( r.size() ), cap );
	}
	DisjointSet ds( r.size() );
	for( const auto u : sums_of_products( r, reading ) ) {
		const Element first = u.min();
		u.for_each( [ & ]( Element x ) { ds.unite( first, x ); } );
	}
	std::vector< Element > label( r.size() );
	for( Element x = 0; x < r.size(); ++x ) {
		label[ x ] = ds.find( x );
	}
	auto classes = parts_by_min( label, r.size() );
	auto proj = projection_of( classes, r.size() );
	RawTables raw = lift_tables( r, classes, proj, true, "fundamental ring" );
	raw.name = r.name() + "/gamma*";
	raw.construction = "gamma-star";
	raw.source = r.name();
	return { std::move( classes ), std::move( proj ), HyperRing::validate( raw ) };
}

ElementSubset gamma_image( const FundamentalRingImage & img, ElementSubset i ) {
	return project( img.projection, i );
}

bool classical_n_ideal( const HyperRing & ring, ElementSubset i ) {
	const int n = ring.size();
	std::vector< int > mul( n * n );
	for( int a = 0; a < n; ++a ) {
		for( int b = 0; b < n; ++b ) {
			const auto cell = ring.mul( a, b );
			if( !cell.is_singleton() ) {
				throw DimensionMismatch( "classical_n_ideal needs an ordinary ring" );
			}
			mul[ a * n + b ] = cell.min();
		}
	}
	if( !i.contains( 0 ) || i == ring.carrier() ) {
		return false;
	}
	for( int a = 0; a < n; ++a ) {
		for( int b = 0; b < n; ++b ) {
			if( i.contains( a ) && i.contains( b ) && !i.contains( ring.sub( a, b ) ) ) {
				return false;
			}
			if( i.contains( b ) && ( !i.contains( mul[ a * n + b ] ) || !i.contains( mul[ b * n + a ] ) ) ) {
				return false;
			}
		}
	}
	std::vector< bool > nil( n, false );
	for( int x = 0; x < n; ++x ) {
		int p = x;
		for( int k = 0; k <= n && !nil[ x ]; ++k ) {
			nil[ x ] = p == 0;
			p = mul[ p * n + x ];
		}
	}
	for( int x = 0; x < n; ++x ) {
		for( int y = 0; y < n; ++y ) {
			if( !nil[ x ] && i.contains( mul[ x * n + y ] ) && !i.contains( y ) ) {
				return false;
			}
		}
	}
	return true;
}

} // namespace hyperwb
