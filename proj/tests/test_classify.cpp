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
#include "hyperwb/corpus.hpp"
#include "oracle.hpp"

using namespace hyperwb;

namespace {

RingContext zn( int n ) {
	return RingContext( HyperRing::validate( ordinary_zn( n ) ) );
}

RingContext zna( int n, std::vector< int > as ) {
	return RingContext( HyperRing::validate( zn_with_a( n, as ) ) );
}

std::vector< HyperRing > commutative_corpus() {
	std::vector< HyperRing > out;
	for( auto & m : generate_corpus( default_corpus_spec() ) ) {
		if( m.ring.commutative() ) {
			out.push_back( std::move( m.ring ) );
		}
	}
	return out;
}

} // namespace

TEST( Prime, Examples ) {
	const auto z6 = zn( 6 );
	const auto z4 = zn( 4 );
	EXPECT_TRUE( is_prime( z6, ElementSubset( { 0, 3 } ) ) );
	const auto c = is_prime( z4, ElementSubset( { 0 } ) );
	EXPECT_FALSE( c );
	EXPECT_EQ( c.witness, ( std::vector< int >{ 2, 2 } ) );
	EXPECT_FALSE( is_prime( z4, z4.carrier() ) );
	EXPECT_TRUE( is_prime( zn( 5 ), ElementSubset( { 0 } ) ) );
	EXPECT_FALSE( is_prime( zn( 5 ), ElementSubset( { 0 } ), PrimeMode::strict ) );
}

TEST( Primary, Examples ) {
	EXPECT_TRUE( is_primary( zn( 4 ), ElementSubset( { 0 } ) ) );
	EXPECT_FALSE( is_primary( zn( 6 ), ElementSubset( { 0 } ) ) );
	const auto z6 = zn( 6 );
	for( const auto p : z6.ideals() ) {
		if( is_prime( z6, p ) ) {
			EXPECT_TRUE( is_primary( z6, p ) );
		}
	}
}

TEST( RHyperideal, Examples ) {
	const auto z6 = zn( 6 );
	EXPECT_TRUE( is_r_hyperideal( z6, ElementSubset( { 0, 3 } ) ) );
	EXPECT_TRUE( is_r_hyperideal( z6, z6.carrier(), PrimeMode::relaxed ) );
	EXPECT_FALSE( is_r_hyperideal( z6, z6.carrier(), PrimeMode::strict ) );
	const auto z13 = zna( 13, { 5, 7 } );
	for( const auto i : z13.ideals() ) {
		EXPECT_EQ( static_cast< bool >( is_r_hyperideal( z13, i, PrimeMode::strict ) ), i == ElementSubset( { 0 } ) );
	}
}

TEST( NHyperideal, Examples ) {
	auto list = []( const RingContext & c ) {
		std::vector< ElementSubset > out;
		for( const auto i : c.ideals() ) {
			if( is_n_hyperideal( c, i ) ) {
				out.push_back( i );
			}
		}
		return out;
	};
	EXPECT_EQ( list( zn( 4 ) ), ( std::vector< ElementSubset >{ { 0 }, { 0, 2 } } ) );
	EXPECT_EQ( list( zna( 13, { 5, 7 } ) ), ( std::vector< ElementSubset >{ { 0 } } ) );
	EXPECT_TRUE( list( zn( 6 ) ).empty() );
}

TEST( Essential, Examples ) {
	const auto z6 = zn( 6 );
	const auto z4 = zn( 4 );
	EXPECT_TRUE( is_essential( z6, z6.carrier() ) );
	EXPECT_FALSE( is_essential( z6, ElementSubset( { 0, 2, 4 } ) ) );
	EXPECT_TRUE( is_essential( z4, ElementSubset( { 0, 2 } ) ) );
}

TEST( MultClosed, Examples ) {
	const auto z4 = zn( 4 );
	const auto z6 = zn( 6 );
	EXPECT_TRUE( is_n_mult_closed( z4, ElementSubset( { 1, 3 } ) ) );
	EXPECT_TRUE( is_n_mult_closed( z4, z4.carrier() ) );
	EXPECT_FALSE( is_r_mult_closed( z4, z4.carrier() ) );
	EXPECT_TRUE( is_r_mult_closed( z6, ElementSubset( { 1, 5 } ) ) );
	EXPECT_TRUE( is_r_mult_closed( z6, ElementSubset( { 1, 5 } ), RMultReading::literal ) );
	EXPECT_FALSE( is_r_mult_closed( zn( 2 ), ElementSubset( { 1 } ), RMultReading::literal ) );
	EXPECT_TRUE( is_r_mult_closed( zn( 2 ), ElementSubset( { 1 } ) ) );
	EXPECT_TRUE( is_r_mult_closed( zn( 7 ), ElementSubset( { 1, 2, 3, 4, 5, 6 } ), RMultReading::literal ) );
}

TEST( MaximalDisjoint, Examples ) {
	const auto z4 = zn( 4 );
	EXPECT_EQ( maximal_disjoint_ideal( z4, ElementSubset( { 1 } ), ElementSubset( { 0 } ) ), ElementSubset( { 0, 2 } ) );
	EXPECT_EQ( maximal_disjoint_ideal( z4, ElementSubset( { 1, 2, 3 } ), ElementSubset( { 0 } ) ), ElementSubset( { 0 } ) );
	const auto s = z4.carrier() - z4.nil_radical();
	for( const auto i : maximal_disjoint_ideals( z4, s, ElementSubset( { 0 } ) ) ) {
		EXPECT_TRUE( i.subset_of( z4.nil_radical() ) );
	}
	EXPECT_THROW( maximal_disjoint_ideal( z4, ElementSubset( { 0, 1 } ), ElementSubset( { 0 } ) ), NotDisjoint );
}

TEST( Classifiers, AgreeWithOracleOnCorpus ) {
	for( const auto & r : commutative_corpus() ) {
		const RingContext ctx( r );
		const oracle::Tab t( r );
		const auto ids = t.ideals();
		const auto r0 = t.r0( ids );
		EXPECT_EQ( ctx.nil_radical().bits(), r0 ) << r.name();
		for( const auto m : ids ) {
			const auto i = oracle::as_subset( m );
			EXPECT_EQ( static_cast< bool >( is_prime( ctx, i ) ), t.prime( m ) ) << r.name() << " " << i.to_string();
			EXPECT_EQ( static_cast< bool >( is_r_hyperideal( ctx, i ) ), t.r_ideal( m ) ) << r.name() << " " << i.to_string();
			EXPECT_EQ( static_cast< bool >( is_r_hyperideal( ctx, i, PrimeMode::strict ) ), t.r_ideal( m ) && m != t.full() ) << r.name();
			EXPECT_EQ( static_cast< bool >( is_n_hyperideal( ctx, i ) ), t.n_ideal( m, r0 ) ) << r.name() << " " << i.to_string();
			oracle::Mask rad = t.full();
			for( const auto p : ids ) {
				if( oracle::sub( m, p ) && t.prime( p ) ) {
					rad &= p;
				}
			}
			bool primary = m != t.full();
			for( int x = 0; x < t.n && primary; ++x ) {
				for( int y = 0; y < t.n && primary; ++y ) {
					if( oracle::sub( t.mul[ x ][ y ], m ) && !oracle::has( m, x ) && !oracle::has( rad, y ) ) {
						primary = false;
					}
				}
			}
			EXPECT_EQ( static_cast< bool >( is_primary( ctx, i ) ), primary ) << r.name() << " " << i.to_string();
			bool essential = true;
			for( const auto j : ids ) {
				if( j != 1 && ( j & m ) == 1 ) {
					essential = false;
				}
			}
			EXPECT_EQ( is_essential( ctx, i ), essential && m != 1 ) << r.name() << " " << i.to_string();
		}
	}
}

TEST( Classifiers, ReportFlags ) {
	const auto z4 = zn( 4 );
	const auto f = classify_ideal( z4, ElementSubset( { 0, 2 } ) );
	EXPECT_TRUE( f.n_ideal );
	EXPECT_TRUE( f.prime );
	EXPECT_TRUE( f.maximal );
	EXPECT_TRUE( f.r_ideal );
	const auto g = classify_ideal( z4, ElementSubset( { 0 } ) );
	EXPECT_TRUE( g.n_ideal );
	EXPECT_FALSE( g.prime );
	EXPECT_TRUE( g.witnesses.count( "prime" ) );
}
