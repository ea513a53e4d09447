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

#include "hyperwb/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace hyperwb {

namespace {

using nlohmann::json;

std::string position_of( const std::string & text, std::size_t byte ) {
	int line = 1, col = 1;
	for( std::size_t k = 0; k < byte && k < text.size(); ++k ) {
		if( text[ k ] == '\n' ) {
			++line;
			col = 1;
		} else {
			++col;
		}
	}
	return std::to_string( line ) + ":" + std::to_string( col );
}

[[noreturn]] void fail( const std::string & path, const std::string & msg ) {
	throw FormatError( path + ": " + msg );
}

const json & field( const json & obj, const char * key ) {
	if( !obj.contains( key ) ) {
		fail( key, "missing field" );
	}
	return obj.at( key );
}

/// Maps a table entry (label or index) to an index in file order.
class Labels {
public:
	Labels( const json & doc, int size ) : size_( size ) {
		if( !doc.contains( "elements" ) ) {
			return;
		}
		const auto & el = doc.at( "elements" );
		if( !el.is_array() || static_cast< int >( el.size() ) != size ) {
			fail( "elements", "expected an array of " + std::to_string( size ) + " labels" );
		}
		for( int k = 0; k < size; ++k ) {
			const auto & l = el[ k ];
			if( !l.is_string() && !l.is_number_integer() ) {
				fail( "elements[" + std::to_string( k ) + "]", "label must be a string or an integer" );
			}
			if( !index_.emplace( l.dump(), k ).second ) {
				fail( "elements[" + std::to_string( k ) + "]", "duplicate label " + l.dump() );
			}
		}
		labelled_ = true;
	}

	int resolve( const json & v, const std::string & path ) const {
		if( labelled_ ) {
			const auto it = index_.find( v.dump() );
			if( it == index_.end() ) {
				fail( path, "unknown element label " + v.dump() );
			}
			return it->second;
		}
		if( !v.is_number_integer() ) {
			fail( path, "expected an element index" );
		}
		const auto x = v.get< long long >();
		if( x < 0 || x >= size_ ) {
			fail( path, "index " + std::to_string( x ) + " out of range 0.." + std::to_string( size_ - 1 ) );
		}
		return static_cast< int >( x );
	}

	bool labelled() const noexcept { return labelled_; }

private:
	int size_;
	bool labelled_ = false;
	std::map< std::string, int > index_;
};

const json & row_of( const json & table, int a, int size, const std::string & name ) {
	const auto & row = table[ a ];
	const std::string path = name + "[" + std::to_string( a ) + "]";
	if( !row.is_array() || static_cast< int >( row.size() ) != size ) {
		fail( path, "expected a row of " + std::to_string( size ) + " entries" );
	}
	return row;
}

/// Moves the additive identity to index 0 by swapping it with the element there.
void normalize_zero( RawTables & raw ) {
	const int n = raw.size;
	int zero = -1;
	for( int z = 0; z < n && zero < 0; ++z ) {
		bool ok = true;
		for( int x = 0; x < n && ok; ++x ) {
			ok = raw.add[ z ][ x ] == x && raw.add[ x ][ z ] == x;
		}
		if( ok ) {
			zero = z;
		}
	}
	if( zero <= 0 ) {
		return;
	}
	std::vector< int > perm( n );
	for( int x = 0; x < n; ++x ) {
		perm[ x ] = x == 0 ? zero : x == zero ? 0 : x;
	}
	RawTables out = raw;
	for( int a = 0; a < n; ++a ) {
		for( int b = 0; b < n; ++b ) {
			out.add[ perm[ a ] ][ perm[ b ] ] = perm[ raw.add[ a ][ b ] ];
			auto & cell = out.hmul[ perm[ a ] ][ perm[ b ] ];
			cell.clear();
			for( int c : raw.hmul[ a ][ b ] ) {
				cell.push_back( perm[ c ] );
			}
			std::sort( cell.begin(), cell.end() );
		}
	}
	raw = std::move( out );
}

} // namespace

RawTables parse_hyperring( const std::string & text ) {
	json doc;
	try {
		doc = json::parse( text );
	} catch( const json::parse_error & e ) {
		throw FormatError( "JSON syntax error at " + position_of( text, e.byte == 0 ? 0 : e.byte - 1 ) + ": " + e.what() );
	}
	if( !doc.is_object() ) {
		fail( "$", "expected a JSON object" );
	}
	RawTables raw;
	const auto & name = field( doc, "name" );
	if( !name.is_string() ) {
		fail( "name", "expected a string" );
	}
	raw.name = name.get< std::string >();
	const auto & size = field( doc, "size" );
	if( !size.is_number_integer() || size.get< long long >() < 1 || size.get< long long >() > kMaxCarrier ) {
		fail( "size", "expected an integer in 1.." + std::to_string( kMaxCarrier ) );
	}
	const int n = size.get< int >();
	raw.size = n;
	for( const char * key : { "construction", "source" } ) {
		if( doc.contains( key ) ) {
			if( !doc.at( key ).is_string() ) {
				fail( key, "expected a string" );
			}
			( std::string( key ) == "construction" ? raw.construction : raw.source ) = doc.at( key ).get< std::string >();
		}
	}
	const Labels labels( doc, n );

	const auto & add = field( doc, "add" );
	if( !add.is_array() || static_cast< int >( add.size() ) != n ) {
		fail( "add", "expected " + std::to_string( n ) + " rows" );
	}
	raw.add.assign( n, std::vector< int >( n ) );
	for( int a = 0; a < n; ++a ) {
		const auto & row = row_of( add, a, n, "add" );
		for( int b = 0; b < n; ++b ) {
			raw.add[ a ][ b ] = labels.resolve( row[ b ], "add[" + std::to_string( a ) + "][" + std::to_string( b ) + "]" );
		}
	}

	const auto & hmul = field( doc, "hmul" );
	if( !hmul.is_array() || static_cast< int >( hmul.size() ) != n ) {
		fail( "hmul", "expected " + std::to_string( n ) + " rows" );
	}
	raw.hmul.assign( n, std::vector< std::vector< int > >( n ) );
	for( int a = 0; a < n; ++a ) {
		const auto & row = row_of( hmul, a, n, "hmul" );
		for( int b = 0; b < n; ++b ) {
			const std::string path = "hmul[" + std::to_string( a ) + "][" + std::to_string( b ) + "]";
			const auto & cell = row[ b ];
			if( !cell.is_array() ) {
				fail( path, "expected an array of elements" );
			}
			for( std::size_t k = 0; k < cell.size(); ++k ) {
				raw.hmul[ a ][ b ].push_back( labels.resolve( cell[ k ], path + "[" + std::to_string( k ) + "]" ) );
			}
			auto & v = raw.hmul[ a ][ b ];
			std::sort( v.begin(), v.end() );
			v.erase( std::unique( v.begin(), v.end() ), v.end() );
		}
	}
	if( labels.labelled() ) {
		normalize_zero( raw );
	}
	return raw;
}

HyperRing load_hyperring_text( const std::string & text, ValidationOptions options ) {
	return HyperRing::validate( parse_hyperring( text ), options );
}

HyperRing load_hyperring( const std::string & path, ValidationOptions options ) {
	try {
		return load_hyperring_text( read_file( path ), options );
	} catch( const FormatError & e ) {
		throw FormatError( path + ": " + e.what() );
	}
}

std::string serialize_tables( const RawTables & raw ) {
	std::ostringstream out;
	out << "{\n";
	out << "  \"name\": " << json( raw.name ).dump() << ",\n";
	out << "  \"size\": " << raw.size << ",\n";
	if( !raw.construction.empty() ) {
		out << "  \"construction\": " << json( raw.construction ).dump() << ",\n";
	}
	if( !raw.source.empty() ) {
		out << "  \"source\": " << json( raw.source ).dump() << ",\n";
	}
	out << "  \"add\": [\n";
	for( int a = 0; a < raw.size; ++a ) {
		out << "    [";
		for( int b = 0; b < raw.size; ++b ) {
			out << ( b ? ", " : "" ) << raw.add[ a ][ b ];
		}
		out << "]" << ( a + 1 < raw.size ? "," : "" ) << "\n";
	}
	out << "  ],\n";
	out << "  \"hmul\": [\n";
	for( int a = 0; a < raw.size; ++a ) {
		out << "    [";
		for( int b = 0; b < raw.size; ++b ) {
			out << ( b ? ", " : "" ) << "[";
			const auto & cell = raw.hmul[ a ][ b ];
			for( std::size_t k = 0; k < cell.size(); ++k ) {
				out << ( k ? ", " : "" ) << cell[ k ];
			}
			out << "]";
		}
		out << "]" << ( a + 1 < raw.size ? "," : "" ) << "\n";
	}
	out << "  ]\n";
	out << "}\n";
	return out.str();
}

std::string serialize_hyperring( const HyperRing & r ) {
	return serialize_tables( r.to_raw() );
}

void save_hyperring( const HyperRing & r, const std::string & path ) {
	write_file( path, serialize_hyperring( r ) );
}

std::string read_file( const std::string & path ) {
	std::ifstream in( path, std::ios::binary );
	if( !in ) {
		throw FormatError( "cannot open " + path );
	}
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

void write_file( const std::string & path, const std::string & content ) {
	std::ofstream out( path, std::ios::binary );
	if( !out || !( out << content ) ) {
		throw FormatError( "cannot write " + path );
	}
}

} // namespace hyperwb
