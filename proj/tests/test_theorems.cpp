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

#include <set>

#include <gtest/gtest.h>

#include "hyperwb/corpus.hpp"
#include "hyperwb/io.hpp"
#include "hyperwb/theorems.hpp"
#include "oracle.hpp"

using namespace hyperwb;

namespace {

HyperRing zn( int n ) {
	return HyperRing::validate( ordinary_zn( n ) );
}

HyperRing zna( int n, std::vector< int > as ) {
	return HyperRing::validate( zn_with_a( n, as ) );
}

TheoremVerdict run_one( const std::string & id, const HyperRing & r, const Readings & rd = {} ) {
	const RingContext ctx( r, { std::max( kDefaultEnumerationCap, r.size() ) } );
	const RingPool pool{ { std::make_shared< const RingContext >( ctx ) } };
	return run_theorem( *find_entry( id ), ctx, rd, {}, pool );
}

} // namespace

TEST( Registry, MatchesManifest ) {
	const auto doc = nlohmann::json::parse( read_file( HYPERWB_DATA_DIR "/registry_manifest.json" ) );
	const auto & entries = doc.at( "entries" );
	ASSERT_EQ( entries.size(), registry().size() );
	std::set< std::string > ids;
	for( std::size_t k = 0; k < entries.size(); ++k ) {
		EXPECT_EQ( entries[ k ].at( "id" ), registry()[ k ].id );
		EXPECT_EQ( entries[ k ].at( "name" ), registry()[ k ].name );
		EXPECT_FALSE( registry()[ k ].statement.empty() );
		EXPECT_TRUE( ids.insert( registry()[ k ].id ).second );
	}
	EXPECT_EQ( registry().size(), 41U );
	EXPECT_FALSE( doc.at( "out_of_scope" ).empty() );
	for( const auto & o : doc.at( "out_of_scope" ) ) {
		EXPECT_EQ( find_entry( o.at( "id" ) ), nullptr );
	}
}

TEST( Readings, ParseAndLabel ) {
	const auto r = parse_readings( "regular=vnr,prime=strict" );
	EXPECT_TRUE( r.is( Axis::regular, 1 ) );
	EXPECT_TRUE( r.is( Axis::prime, 1 ) );
	EXPECT_EQ( r.label(), "regular=vnr,prime=strict" );
	EXPECT_TRUE( parse_readings( "default" ).is_default() );
	EXPECT_EQ( Readings{}.label(), "default" );
	EXPECT_THROW( parse_readings( "regular=maybe" ), FormatError );
	EXPECT_THROW( parse_readings( "colour=red" ), FormatError );
	EXPECT_EQ( default_readings_json().size(), static_cast< std::size_t >( kAxisCount ) );
}

TEST( RunTheorem, WorkedExamples ) {
	const auto t20 = run_one( "T20", zn( 4 ) );
	EXPECT_EQ( t20.status, Status::holds );
	EXPECT_EQ( t20.instances, 2 );
	EXPECT_EQ( run_one( "T33", zna( 13, { 5, 7 } ) ).status, Status::holds );
}

TEST( RunTheorem, Gates ) {
	const auto m2 = HyperRing::validate( matrix_hyperring( zn( 2 ), 2 ).to_raw(), { .require_commutative = false } );
	const auto v = run_one( "T18", m2 );
	EXPECT_EQ( v.status, Status::not_applicable );
	EXPECT_NE( v.reason.find( "commutative" ), std::string::npos );
	const auto noid = run_one( "T06", zna( 6, { 2, 3 } ) );
	EXPECT_EQ( noid.status, Status::not_applicable );
	EXPECT_EQ( noid.reason, "no identity" );
	const auto scalar = run_one( "T40", zna( 5, { 1, 2 } ) );
	EXPECT_EQ( scalar.status, Status::not_applicable );
	const auto standing = run_one( "T33", zna( 2, { 0, 1 } ) );
	EXPECT_EQ( standing.status, Status::not_applicable );
	const auto off = run_one( "T33", zna( 2, { 0, 1 } ), Readings{}.flipped( Axis::standing ) );
	EXPECT_EQ( off.status, Status::counterexample );
	EXPECT_TRUE( off.reverified );
}

TEST( RunTheorem, CapGivesNotApplicable ) {
	const auto rep = run_suite( { zn( 20 ) }, { "T20" } );
	ASSERT_EQ( rep.verdicts.size(), 1U );
	EXPECT_EQ( rep.verdicts[ 0 ].status, Status::not_applicable );
	EXPECT_NE( rep.verdicts[ 0 ].reason.find( "enumeration cap" ), std::string::npos );
	HarnessOptions big;
	big.enumeration_cap = 20;
	EXPECT_EQ( run_suite( { zn( 20 ) }, { "T20" }, big ).verdicts[ 0 ].status, Status::holds );
}

TEST( RunTheorem, T15WitnessIsGenuine ) {
	const auto v = run_one( "T15", zn( 6 ) );
	ASSERT_EQ( v.status, Status::counterexample );
	EXPECT_TRUE( v.reverified );
	const oracle::Tab t( zn( 6 ) );
	oracle::Mask s = 0, tt = 0;
	for( int x : v.witness.at( "S" ) ) {
		s |= oracle::bit( x );
	}
	for( int x : v.witness.at( "T" ) ) {
		tt |= oracle::bit( x );
	}
	EXPECT_TRUE( oracle::has( s, 1 ) && !oracle::has( s, 0 ) );
	for( int x = 0; x < 6; ++x ) {
		if( t.nzd( x ) ) {
			EXPECT_TRUE( oracle::has( s, x ) );
			for( int a = 0; a < 6; ++a ) {
				if( oracle::has( s, a ) ) {
					EXPECT_TRUE( oracle::sub( t.mul[ x ][ a ], s ) );
				}
			}
		}
	}
	EXPECT_TRUE( oracle::has( tt, 1 ) && !oracle::has( tt, 0 ) );
	EXPECT_TRUE( oracle::sub( t.prod( tt, tt ), tt ) );
	EXPECT_TRUE( oracle::has( t.prod( s, tt ), 0 ) );
}

TEST( Suite, EmptyAndFilter ) {
	const auto empty = run_suite( {} );
	EXPECT_TRUE( empty.verdicts.empty() );
	EXPECT_TRUE( empty.ok() );
	const auto only = run_suite( { zn( 4 ), zn( 6 ) }, { "T18" } );
	for( const auto & v : only.verdicts ) {
		EXPECT_EQ( v.theorem, "T18" );
	}
	EXPECT_EQ( only.verdicts.size(), 4U );
	EXPECT_THROW( run_suite( { zn( 4 ) }, { "T99" } ), FormatError );
}

TEST( Suite, ReadingSensitiveDoesNotCount ) {
	const auto rep = run_suite( { zn( 2 ) }, { "T16" } );
	EXPECT_TRUE( rep.ok() );
	EXPECT_EQ( rep.reading_sensitive, 1 );
	const auto it = std::find_if( rep.verdicts.begin(), rep.verdicts.end(), []( const TheoremVerdict & v ) { return v.reading_sensitive; } );
	ASSERT_NE( it, rep.verdicts.end() );
	EXPECT_TRUE( it->readings.is( Axis::r_mult, 1 ) );
	const auto forced = parse_readings( "r-mult=literal" );
	EXPECT_FALSE( run_suite( { zn( 2 ) }, { "T16" }, {}, &forced ).ok() );
}

TEST( Suite, DeterministicJson ) {
	std::vector< HyperRing > corpus;
	for( auto & m : generate_corpus( parse_corpus_spec( "ordinary:2-8,with-a:2-6,depth:1,product-cap:12" ) ) ) {
		corpus.push_back( std::move( m.ring ) );
	}
	const auto a = run_suite( corpus ).to_json();
	const auto b = run_suite( corpus ).to_json();
	EXPECT_EQ( a, b );
	EXPECT_EQ( a.find( "wall_ms" ), std::string::npos );
	HarnessOptions timed;
	timed.timing = true;
	EXPECT_NE( run_suite( { zn( 3 ) }, { "T20" }, timed ).to_json().find( "wall_ms" ), std::string::npos );
	const auto doc = nlohmann::json::parse( a );
	EXPECT_EQ( doc.at( "default_readings" ).at( "regular" ), "nzd" );
	EXPECT_EQ( doc.at( "verdicts" ).size(), run_suite( corpus ).verdicts.size() );
}

TEST( Properties, NHyperidealFactsAgainstOracle ) {
	for( const auto & m : generate_corpus( default_corpus_spec() ) ) {
		const auto & r = m.ring;
		if( !r.commutative() ) {
			continue;
		}
		const oracle::Tab t( r );
		const auto ids = t.ideals();
		const auto r0 = t.r0( ids );
		std::vector< oracle::Mask > ns;
		for( const auto i : ids ) {
			if( t.n_ideal( i, r0 ) ) {
				ns.push_back( i );
				EXPECT_TRUE( oracle::sub( i, r0 ) ) << r.name();
			}
		}
		const bool harness_t20 = run_one( "T20", r, Readings{}.flipped( Axis::standing ) ).status == Status::holds;
		EXPECT_TRUE( harness_t20 ) << r.name();
		const bool only_zero = ns.size() == 1 && ns[ 0 ] == 1;
		const bool t33 = run_one( "T33", r, Readings{}.flipped( Axis::standing ) ).status == Status::holds;
		EXPECT_EQ( t33, only_zero == t.integral() ) << r.name();
	}
}
