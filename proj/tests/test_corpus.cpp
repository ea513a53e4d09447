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

#include "hyperwb/corpus.hpp"
#include "hyperwb/io.hpp"
#include "oracle.hpp"

using namespace hyperwb;

namespace {

std::string serialized( const std::vector< CorpusMember > & members ) {
	std::string out;
	for( const auto & m : members ) {
		out += serialize_hyperring( m.ring );
	}
	return out;
}

} // namespace

TEST( Corpus, DefaultCounts ) {
	CorpusLog log;
	const auto members = generate_corpus( default_corpus_spec(), &log );
	EXPECT_EQ( members.size(), 122U );
	EXPECT_EQ( log.candidates, 183 );
	EXPECT_EQ( log.rejected, 0 );
	EXPECT_EQ( log.duplicates, 61 );
	EXPECT_EQ( static_cast< int >( log.messages.size() ), log.rejected + log.duplicates );
}

TEST( Corpus, Deterministic ) {
	const auto a = generate_corpus( default_corpus_spec() );
	const auto b = generate_corpus( default_corpus_spec() );
	EXPECT_EQ( serialized( a ), serialized( b ) );
	EXPECT_EQ( corpus_manifest( a ), corpus_manifest( b ) );
}

TEST( Corpus, MatchesPinnedManifest ) {
	const auto members = generate_corpus( default_corpus_spec() );
	const auto problems = check_manifest( members, read_file( HYPERWB_DATA_DIR "/default_corpus_manifest.json" ) );
	EXPECT_TRUE( problems.empty() ) << problems.front();
	EXPECT_EQ( corpus_manifest( members ), read_file( HYPERWB_DATA_DIR "/default_corpus_manifest.json" ) );
}

TEST( Corpus, ManifestDetectsTampering ) {
	auto members = generate_corpus( parse_corpus_spec( "ordinary:2-4" ) );
	const auto manifest = corpus_manifest( members );
	members[ 1 ] = { HyperRing::validate( zn_with_a( 3, { 1, 2 } ) ).renamed( "Z3" ), "ordinary-Zn", "n=3" };
	const auto problems = check_manifest( members, manifest );
	ASSERT_EQ( problems.size(), 1U );
	EXPECT_NE( problems[ 0 ].find( "hash" ), std::string::npos );
}

TEST( Corpus, SelectionStrings ) {
	const auto five = generate_corpus( parse_corpus_spec( "ordinary:2-6" ) );
	ASSERT_EQ( five.size(), 5U );
	for( std::size_t k = 0; k < five.size(); ++k ) {
		EXPECT_EQ( five[ k ].ring.name(), "Z" + std::to_string( k + 2 ) );
	}
	const auto z13 = generate_corpus( parse_corpus_spec( "with-a:13,a:5.7" ) );
	ASSERT_EQ( z13.size(), 1U );
	EXPECT_EQ( z13[ 0 ].ring.name(), "Z13[A={5,7}]" );
	EXPECT_TRUE( oracle::Tab( z13[ 0 ].ring ).integral() );
	EXPECT_THROW( parse_corpus_spec( "bogus:1" ), FormatError );
	EXPECT_THROW( parse_corpus_spec( "ordinary:x" ), FormatError );
}

TEST( Corpus, InvalidCandidatesAreLogged ) {
	auto spec = parse_corpus_spec( "ordinary:2-3" );
	auto bad = ordinary_zn( 5 );
	bad.name = "Z5 shifted";
	for( int a = 0; a < 5; ++a ) {
		for( int b = 0; b < 5; ++b ) {
			bad.hmul[ a ][ b ] = { a * b % 5, ( a * b + 1 ) % 5 };
			std::sort( bad.hmul[ a ][ b ].begin(), bad.hmul[ a ][ b ].end() );
		}
	}
	spec.extra.push_back( bad );
	CorpusLog log;
	const auto members = generate_corpus( spec, &log );
	EXPECT_EQ( members.size(), 2U );
	EXPECT_EQ( log.rejected, 1 );
	ASSERT_FALSE( log.messages.empty() );
	EXPECT_NE( log.messages.back().find( "Z5 shifted" ), std::string::npos );
}

TEST( Corpus, MembersRevalidateAndAreAxiomClean ) {
	for( const auto & m : generate_corpus( default_corpus_spec() ) ) {
		EXPECT_TRUE( oracle::failed_axioms( m.ring.to_raw(), m.ring.commutative() ).empty() ) << m.ring.name();
		EXPECT_NO_THROW( HyperRing::validate( m.ring.to_raw(), { .require_commutative = m.ring.commutative() } ) );
	}
}

TEST( Corpus, Sha256 ) {
	EXPECT_EQ( sha256_hex( "abc" ), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad" );
}
