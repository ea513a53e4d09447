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

#include <gtest/gtest.h>

#include "hyperwb/classify.hpp"
#include "hyperwb/construct.hpp"
#include "hyperwb/corpus.hpp"
#include "oracle.hpp"

using namespace hyperwb;

namespace {

HyperRing zn( int n ) {
	return HyperRing::validate( ordinary_zn( n ) );
}

HyperRing zna( int n, std::vector< int > as ) {
	return HyperRing::validate( zn_with_a( n, as ) );
}

/// Direct check of the two homomorphism laws.
bool hom_oracle( const std::vector< int > & f, const oracle::Tab & a, const oracle::Tab & b ) {
	for( int x = 0; x < a.n; ++x ) {
		for( int y = 0; y < a.n; ++y ) {
			if( f[ a.add[ x ][ y ] ] != b.add[ f[ x ] ][ f[ y ] ] ) {
				return false;
			}
			oracle::Mask image = 0;
			for( int z = 0; z < a.n; ++z ) {
				if( oracle::has( a.mul[ x ][ y ], z ) ) {
					image |= oracle::bit( f[ z ] );
				}
			}
			if( image != b.mul[ f[ x ] ][ f[ y ] ] ) {
				return false;
			}
		}
	}
	return true;
}

} // namespace

TEST( Quotient, Examples ) {
	const auto z4 = zn( 4 );
	EXPECT_TRUE( quotient( z4, ElementSubset( { 0 } ) ).ring.same_tables( z4 ) );
	EXPECT_EQ( quotient( z4, z4.carrier() ).ring.size(), 1 );
	const auto q = quotient( z4, ElementSubset( { 0, 2 } ) );
	EXPECT_TRUE( q.ring.same_tables( zn( 2 ) ) );
	EXPECT_EQ( q.projection, ( std::vector< Element >{ 0, 1, 0, 1 } ) );
	EXPECT_EQ( project( q.projection, ElementSubset( { 0, 2 } ) ), ElementSubset( { 0 } ) );
	EXPECT_THROW( quotient( z4, ElementSubset( { 0, 1 } ) ), NotClosed );
}

TEST( Quotient, CosetTablesMatchOracle ) {
	for( int n = 2; n <= 12; ++n ) {
		const auto r = zn( n );
		for( const auto j : hyperideal_members( r ) ) {
			const auto q = quotient( r, j );
			const int d = j.count();
			EXPECT_EQ( q.ring.size(), n / d );
			for( int x = 0; x < n; ++x ) {
				for( int y = 0; y < n; ++y ) {
					EXPECT_EQ( q.ring.add( q.projection[ x ], q.projection[ y ] ), q.projection[ ( x + y ) % n ] );
					EXPECT_EQ( q.ring.mul( q.projection[ x ], q.projection[ y ] ), ElementSubset( { q.projection[ x * y % n ] } ) );
				}
			}
		}
	}
}

TEST( Product, Examples ) {
	const auto z2 = zn( 2 );
	const auto p = direct_product( z2, z2 );
	EXPECT_EQ( p.size(), 4 );
	EXPECT_TRUE( p.mul( pair_index( z2, 1, 0 ), pair_index( z2, 0, 1 ) ).contains( pair_index( z2, 0, 0 ) ) );
	std::vector< ElementSubset > products;
	for( const auto i : hyperideal_members( z2 ) ) {
		for( const auto j : hyperideal_members( z2 ) ) {
			ElementSubset s;
			i.for_each( [ & ]( Element a ) { j.for_each( [ & ]( Element b ) { s.insert( pair_index( z2, a, b ) ); } ); } );
			products.push_back( s );
		}
	}
	std::sort( products.begin(), products.end(), ElementSubset::canonical_less );
	EXPECT_EQ( hyperideal_members( p ), products );
	EXPECT_TRUE( direct_product( zn( 5 ), zn( 1 ) ).same_tables( zn( 5 ) ) );
	EXPECT_THROW( direct_product( zn( 9 ), zn( 8 ) ), CapExceeded );
}

TEST( Product, ComponentwiseTables ) {
	const auto a = zna( 4, { 2, 3 } );
	const auto b = zna( 3, { 1, 2 } );
	const auto p = direct_product( a, b );
	for( int x1 = 0; x1 < 4; ++x1 ) {
		for( int x2 = 0; x2 < 3; ++x2 ) {
			for( int y1 = 0; y1 < 4; ++y1 ) {
				for( int y2 = 0; y2 < 3; ++y2 ) {
					ElementSubset want;
					a.mul( x1, y1 ).for_each( [ & ]( Element u ) { b.mul( x2, y2 ).for_each( [ & ]( Element v ) { want.insert( pair_index( b, u, v ) ); } ); } );
					EXPECT_EQ( p.mul( pair_index( b, x1, x2 ), pair_index( b, y1, y2 ) ), want );
				}
			}
		}
	}
}

TEST( Matrix, Examples ) {
	const auto z2 = zn( 2 );
	EXPECT_TRUE( matrix_hyperring( z2, 1 ).same_tables( z2 ) );
	const auto m = matrix_hyperring( z2, 2 );
	EXPECT_EQ( m.size(), 16 );
	EXPECT_FALSE( m.commutative() );
	for( int x = 0; x < 16; ++x ) {
		for( int y = 0; y < 16; ++y ) {
			const auto a = matrix_entries( z2, 2, x );
			const auto b = matrix_entries( z2, 2, y );
			const std::vector< Element > c = {
				( a[ 0 ] * b[ 0 ] + a[ 1 ] * b[ 2 ] ) % 2,
				( a[ 0 ] * b[ 1 ] + a[ 1 ] * b[ 3 ] ) % 2,
				( a[ 2 ] * b[ 0 ] + a[ 3 ] * b[ 2 ] ) % 2,
				( a[ 2 ] * b[ 1 ] + a[ 3 ] * b[ 3 ] ) % 2,
			};
			EXPECT_EQ( m.mul( x, y ), ElementSubset( { matrix_index( z2, c ) } ) );
		}
	}
	EXPECT_THROW( matrix_hyperring( zna( 3, { 1, 2 } ), 2, 81 ), NoIdentity );
	EXPECT_THROW( matrix_hyperring( zn( 3 ), 2 ), CapExceeded );
}

TEST( Matrix, CornerRealizesProduct ) {
	const auto r = zn( 2 );
	const auto m = matrix_hyperring( r, 2 );
	for( int x = 0; x < 2; ++x ) {
		for( int y = 0; y < 2; ++y ) {
			ElementSubset want;
			r.mul( x, y ).for_each( [ & ]( Element z ) { want.insert( matrix_corner( r, 2, z ) ); } );
			EXPECT_EQ( m.mul( matrix_corner( r, 2, x ), matrix_corner( r, 2, y ) ), want );
		}
	}
	EXPECT_EQ( matrix_ideal( r, 2, ElementSubset( { 0 } ) ), ElementSubset( { 0 } ) );
	EXPECT_EQ( matrix_ideal( r, 2, r.carrier() ), m.carrier() );
}

TEST( Homomorphism, Examples ) {
	const auto z4 = zn( 4 );
	const auto z2 = zn( 2 );
	const auto id = check_good_homomorphism( { 0, 1, 2, 3 }, z4, z4 );
	EXPECT_EQ( id.kernel, ElementSubset( { 0 } ) );
	EXPECT_TRUE( id.injective && id.surjective );
	const auto mod2 = check_good_homomorphism( { 0, 1, 0, 1 }, z4, z2 );
	EXPECT_EQ( mod2.kernel, ElementSubset( { 0, 2 } ) );
	EXPECT_EQ( image_ideal( mod2, ElementSubset( { 0, 2 } ) ), ElementSubset( { 0 } ) );
	EXPECT_EQ( preimage_ideal( mod2, 4, ElementSubset( { 0 } ) ), mod2.kernel );
	EXPECT_EQ( preimage_ideal( mod2, 4, z2.carrier() ), z4.carrier() );
	const bool zero_ok = hom_oracle( { 0, 0, 0, 0 }, oracle::Tab( z4 ), oracle::Tab( z2 ) );
	if( zero_ok ) {
		EXPECT_NO_THROW( check_good_homomorphism( { 0, 0, 0, 0 }, z4, z2 ) );
	} else {
		EXPECT_THROW( check_good_homomorphism( { 0, 0, 0, 0 }, z4, z2 ), NotHomomorphism );
	}
	EXPECT_THROW( check_good_homomorphism( { 0, 1, 2 }, z4, z2 ), DimensionMismatch );
	EXPECT_THROW( check_good_homomorphism( { 0, 1, 1, 1 }, z4, z2 ), NotHomomorphism );
}

TEST( Homomorphism, EnumerationMatchesAllMaps ) {
	const std::vector< HyperRing > rings = { zn( 2 ), zn( 3 ), zn( 4 ), zna( 4, { 2, 3 } ), zna( 3, { 1, 2 } ), zn( 6 ), zna( 2, { 0, 1 } ) };
	for( const auto & a : rings ) {
		for( const auto & b : rings ) {
			const oracle::Tab ta( a ), tb( b );
			std::set< std::vector< int > > want;
			std::vector< int > f( a.size(), 0 );
			for( ;; ) {
				if( hom_oracle( f, ta, tb ) ) {
					want.insert( f );
				}
				int k = 0;
				while( k < a.size() && ++f[ k ] == b.size() ) {
					f[ k++ ] = 0;
				}
				if( k == a.size() ) {
					break;
				}
			}
			std::set< std::vector< int > > got;
			for( const auto & h : enumerate_good_homomorphisms( a, b ) ) {
				got.insert( h.map );
			}
			EXPECT_EQ( got, want ) << a.name() << " -> " << b.name();
		}
	}
}

TEST( Subring, Examples ) {
	const auto z6 = zn( 6 );
	EXPECT_TRUE( subhyperring_restrict( z6, z6.carrier() ).ring.same_tables( z6 ) );
	EXPECT_EQ( subhyperring_restrict( z6, ElementSubset( { 0 } ) ).ring.size(), 1 );
	const auto s = subhyperring_restrict( z6, ElementSubset( { 0, 2, 4 } ) );
	EXPECT_EQ( s.embedding, ( std::vector< Element >{ 0, 2, 4 } ) );
	EXPECT_EQ( s.ring.scalar_identity(), std::optional< Element >( 2 ) );
	EXPECT_EQ( s.ring.mul( 2, 2 ), ElementSubset( { 2 } ) );
	EXPECT_THROW( subhyperring_restrict( z6, ElementSubset( { 0, 1 } ) ), NotClosed );
}

TEST( Subring, EnumerationMatchesScan ) {
	for( const auto & r : { zn( 6 ), zn( 8 ), zna( 6, { 2, 3 } ), zna( 8, { 5, 7 } ) } ) {
		const oracle::Tab t( r );
		std::vector< ElementSubset > want;
		for( oracle::Mask m = 1; m <= t.full(); ++m ) {
			if( !oracle::has( m, 0 ) ) {
				continue;
			}
			bool ok = true;
			for( int a = 0; a < t.n && ok; ++a ) {
				for( int b = 0; b < t.n && ok; ++b ) {
					if( oracle::has( m, a ) && oracle::has( m, b ) ) {
						ok = oracle::has( m, t.add[ a ][ t.neg[ b ] ] ) && oracle::sub( t.mul[ a ][ b ], m );
					}
				}
			}
			if( ok ) {
				want.push_back( oracle::as_subset( m ) );
			}
		}
		std::sort( want.begin(), want.end(), ElementSubset::canonical_less );
		EXPECT_EQ( enumerate_subhyperrings( r ), want ) << r.name();
	}
}

TEST( Gamma, Examples ) {
	const auto z2 = fundamental_ring( zn( 2 ) );
	EXPECT_LE( z2.ring.size(), 2 );
	EXPECT_TRUE( z2.ring.is_ordinary() );
	EXPECT_EQ( fundamental_ring( zn( 1 ) ).ring.size(), 1 );
	for( int n = 2; n <= 10; ++n ) {
		const auto img = fundamental_ring( zn( n ) );
		EXPECT_TRUE( img.ring.is_ordinary() );
		EXPECT_EQ( img.projection.size(), static_cast< std::size_t >( n ) );
	}
	EXPECT_THROW( fundamental_ring( zn( 11 ) ), CapExceeded );
}

TEST( Gamma, ProjectionIsAHomomorphismOntoAnOrdinaryRing ) {
	for( const auto & m : generate_corpus( default_corpus_spec() ) ) {
		const auto & r = m.ring;
		if( r.size() > 10 || !r.commutative() ) {
			continue;
		}
		for( const auto reading : { GammaReading::free_sums, GammaReading::distinct_summands } ) {
			std::optional< FundamentalRingImage > found;
			try {
				found.emplace( fundamental_ring( r, 10, reading ) );
			} catch( const IllDefinedQuotient & ) {
				continue;
			}
			const auto & img = *found;
			ASSERT_TRUE( img.ring.is_ordinary() ) << r.name();
			for( int x = 0; x < r.size(); ++x ) {
				for( int y = 0; y < r.size(); ++y ) {
					EXPECT_EQ( img.projection[ r.add( x, y ) ], img.ring.add( img.projection[ x ], img.projection[ y ] ) );
					r.mul( x, y ).for_each( [ & ]( Element z ) { EXPECT_EQ( ElementSubset( { img.projection[ z ] } ), img.ring.mul( img.projection[ x ], img.projection[ y ] ) ) << r.name(); } );
				}
			}
		}
	}
}

TEST( ClassicalNIdeal, Examples ) {
	const auto z5 = zn( 5 );
	const auto z4 = zn( 4 );
	EXPECT_TRUE( classical_n_ideal( z5, ElementSubset( { 0 } ) ) );
	EXPECT_TRUE( classical_n_ideal( z4, ElementSubset( { 0, 2 } ) ) );
	EXPECT_FALSE( classical_n_ideal( z4, z4.carrier() ) );
	EXPECT_FALSE( classical_n_ideal( zn( 6 ), ElementSubset( { 0, 2 } ) ) );
	EXPECT_THROW( classical_n_ideal( zna( 5, { 1, 2 } ), ElementSubset( { 0 } ) ), DimensionMismatch );
}
