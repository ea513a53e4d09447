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

#include <filesystem>

#include <gtest/gtest.h>

#include "hyperwb/corpus.hpp"
#include "hyperwb/io.hpp"

using namespace hyperwb;

namespace {

std::string error_of( const std::string & text ) {
	try {
		load_hyperring_text( text );
	} catch( const HyperError & e ) {
		return e.what();
	}
	return "";
}

bool mentions( const std::string & msg, const std::string & part ) {
	return msg.find( part ) != std::string::npos;
}

} // namespace

TEST( Io, CanonicalFilesRoundTrip ) {
	for( const auto & entry : std::filesystem::directory_iterator( HYPERWB_DATA_DIR "/rings" ) ) {
		const auto path = entry.path().string();
		if( entry.path().filename() == "broken.json" ) {
			continue;
		}
		const auto text = read_file( path );
		const auto r = load_hyperring( path, { .require_commutative = false } );
		EXPECT_EQ( serialize_hyperring( r ), text ) << path;
	}
}

TEST( Io, CorpusRoundTrip ) {
	for( const auto & m : generate_corpus( default_corpus_spec() ) ) {
		const auto text = serialize_hyperring( m.ring );
		const auto back = load_hyperring_text( text, { .require_commutative = m.ring.commutative() } );
		EXPECT_TRUE( back.same_tables( m.ring ) ) << m.ring.name();
		EXPECT_EQ( back.name(), m.ring.name() );
		EXPECT_EQ( back.construction(), m.ring.construction() );
		EXPECT_EQ( serialize_hyperring( back ), text );
	}
}

TEST( Io, Errors ) {
	EXPECT_TRUE( mentions( error_of( "{\n  \"name\": \"x\",\n  \"size\": 2,\n  oops\n}" ), "4:" ) );
	EXPECT_TRUE( mentions( error_of( R"({"size": 1, "add": [[0]], "hmul": [[[0]]]})" ), "name" ) );
	EXPECT_TRUE( mentions( error_of( R"({"name": "x", "size": 0, "add": [], "hmul": []})" ), "size" ) );
	EXPECT_TRUE( mentions( error_of( R"({"name": "x", "size": 2, "add": [[0, 1], [1, 0]], "hmul": [[[0], [0]], [[0], [7]]]})" ), "hmul[1][1][0]" ) );
	EXPECT_TRUE( mentions( error_of( R"({"name": "x", "size": 2, "add": [[0, 1]], "hmul": [[[0], [0]], [[0], [1]]]})" ), "add" ) );
	EXPECT_TRUE( mentions( error_of( R"({"name": "x", "size": 2, "add": [[0, 1], [1, 0]], "hmul": [[[0], [0]], [[0], []]]})" ), "hmul[1][1]" ) );
	EXPECT_TRUE( mentions( error_of( R"({"name": "x", "size": 2, "add": [[0, 1], [1, 1]], "hmul": [[[0], [0]], [[0], [1]]]})" ), "add-" ) );
	EXPECT_THROW( load_hyperring( "/nonexistent/ring.json" ), FormatError );
}

TEST( Io, BrokenExampleNamesCell ) {
	EXPECT_THROW( load_hyperring( HYPERWB_DATA_DIR "/rings/broken.json" ), EmptyHyperproduct );
}

TEST( Io, LabelsAndZeroNormalization ) {
	const auto r = load_hyperring_text( R"({
  "name": "Z2 labelled",
  "size": 2,
  "elements": ["one", "zero"],
  "add": [["zero", "one"], ["one", "zero"]],
  "hmul": [[["one"], ["zero"]], [["zero"], ["zero"]]]
})" );
	EXPECT_TRUE( r.same_tables( HyperRing::validate( ordinary_zn( 2 ) ) ) );
	EXPECT_TRUE( mentions( error_of( R"({"name": "x", "size": 1, "elements": ["a"], "add": [["b"]], "hmul": [[["a"]]]})" ), "unknown element label" ) );
}
