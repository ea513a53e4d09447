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

#include "hyperwb/corpus.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include <json.hpp>

#include "hyperwb/construct.hpp"
#include "hyperwb/ideals.hpp"
#include "hyperwb/io.hpp"

namespace hyperwb {

CorpusSpec default_corpus_spec() {
	return {};
}

namespace {

std::pair< int, int > parse_range( const std::string & term, const std::string & value ) {
	const auto dash = value.find( '-', 1 );
	try {
		if( dash == std::string::npos ) {
			const int v = std::stoi( value );
			return { v, v };
		}
		return { std::stoi( value.substr( 0, dash ) ), std::stoi( value.substr( dash + 1 ) ) };
	} catch( const std::exception & ) {
		throw FormatError( "corpus spec term " + term + ": bad range '" + value + "'" );
	}
}

std::vector< std::string > split( const std::string & s, char sep ) {
	std::vector< std::string > out;
	std::string cur;
	std::istringstream in( s );
	while( std::getline( in, cur, sep ) ) {
		out.push_back( cur );
	}
	return out;
}

std::string set_label( const std::vector< int > & v ) {
	std::string s = "{";
	for( std::size_t k = 0; k < v.size(); ++k ) {
		s += ( k ? "," : "" ) + std::to_string( v[ k ] );
	}
	return s + "}";
}

} // namespace

CorpusSpec parse_corpus_spec( const std::string & text ) {
	CorpusSpec spec = default_corpus_spec();
	if( text.empty() || text == "default" ) {
		return spec;
	}
	spec.ordinary_max = spec.ordinary_min - 1;
	spec.with_a_max = spec.with_a_min - 1;
	spec.depth = 0;
	for( const auto & term : split( text, ',' ) ) {
		const auto colon = term.find( ':' );
		if( colon == std::string::npos ) {
			throw FormatError( "corpus spec term '" + term + "' has no ':'" );
		}
		const auto key = term.substr( 0, colon );
		const auto value = term.substr( colon + 1 );
		if( key == "ordinary" ) {
			std::tie( spec.ordinary_min, spec.ordinary_max ) = parse_range( key, value );
		} else if( key == "with-a" ) {
			std::tie( spec.with_a_min, spec.with_a_max ) = parse_range( key, value );
		} else if( key == "total" ) {
			std::tie( spec.total_min, spec.total_max ) = parse_range( key, value );
		} else if( key == "depth" ) {
			spec.depth = parse_range( key, value ).first;
		} else if( key == "product-cap" ) {
			spec.product_cap = parse_range( key, value ).first;
		} else if( key == "matrix-cap" ) {
			spec.matrix_cap = parse_range( key, value ).first;
		} else if( key == "a" ) {
			spec.a_sets.clear();
			for( const auto & set : split( value, '|' ) ) {
				std::vector< int > as;
				for( const auto & x : split( set, '.' ) ) {
					try {
						as.push_back( std::stoi( x ) );
					} catch( const std::exception & ) {
						throw FormatError( "corpus spec term a: bad element '" + x + "'" );
					}
				}
				spec.a_sets.push_back( as );
			}
		} else {
			throw FormatError( "unknown corpus spec term '" + key + "'" );
		}
	}
	return spec;
}

RawTables ordinary_zn( int n ) {
	auto raw = zn_with_a( n, { 1 } );
	raw.name = "Z" + std::to_string( n );
	return raw;
}

RawTables zn_with_a( int n, const std::vector< int > & as ) {
	RawTables raw;
	std::vector< int > reduced;
	for( int a : as ) {
		reduced.push_back( ( ( a % n ) + n ) % n );
	}
	std::sort( reduced.begin(), reduced.end() );
	reduced.erase( std::unique( reduced.begin(), reduced.end() ), reduced.end() );
	raw.name = "Z" + std::to_string( n ) + "[A=" + set_label( reduced ) + "]";
	raw.size = n;
	raw.add.assign( n, std::vector< int >( n ) );
	raw.hmul.assign( n, std::vector< std::vector< int > >( n ) );
	for( int x = 0; x < n; ++x ) {
		for( int y = 0; y < n; ++y ) {
			raw.add[ x ][ y ] = ( x + y ) % n;
			auto & cell = raw.hmul[ x ][ y ];
			for( int a : reduced ) {
				cell.push_back( x * a * y % n );
			}
			std::sort( cell.begin(), cell.end() );
			cell.erase( std::unique( cell.begin(), cell.end() ), cell.end() );
		}
	}
	return raw;
}

RawTables total_hyperop( int n ) {
	RawTables raw = ordinary_zn( n );
	raw.name = "Z" + std::to_string( n ) + "[total]";
	for( int x = 0; x < n; ++x ) {
		for( int y = 0; y < n; ++y ) {
			auto & cell = raw.hmul[ x ][ y ];
			cell.clear();
			if( x == 0 || y == 0 ) {
				cell.push_back( 0 );
			} else {
				for( int z = 0; z < n; ++z ) {
					cell.push_back( z );
				}
			}
		}
	}
	return raw;
}

namespace {

class Builder {
public:
	Builder( CorpusLog * log ) : log_( log ) {}

	void offer( RawTables raw, const std::string & generator, const std::string & params, ValidationOptions options = {} ) {
		++log().candidates;
		try {
			add( HyperRing::validate( raw, options ), generator, params );
		} catch( const HyperError & e ) {
			++log().rejected;
			log().messages.push_back( "rejected " + raw.name + ": " + e.what() );
		}
	}

	void add( HyperRing ring, const std::string & generator, const std::string & params ) {
		for( const auto & m : members_ ) {
			if( m.ring.same_tables( ring ) ) {
				++log().duplicates;
				log().messages.push_back( "duplicate " + ring.name() + " of " + m.ring.name() );
				return;
			}
		}
		if( !names_.insert( ring.name() ).second ) {
			++log().duplicates;
			log().messages.push_back( "duplicate name " + ring.name() );
			return;
		}
		members_.push_back( { std::move( ring ), generator, params } );
	}

	std::vector< CorpusMember > & members() { return members_; }

	CorpusLog & log() { return log_ ? *log_ : local_; }

private:
	CorpusLog * log_;
	CorpusLog local_;
	std::vector< CorpusMember > members_;
	std::set< std::string > names_;
};

} // namespace

std::vector< CorpusMember > generate_corpus( const CorpusSpec & spec, CorpusLog * log ) {
	Builder b( log );
	for( int n = spec.ordinary_min; n <= spec.ordinary_max; ++n ) {
		b.offer( ordinary_zn( n ), "ordinary-Zn", "n=" + std::to_string( n ) );
	}
	for( int n = spec.with_a_min; n <= spec.with_a_max; ++n ) {
		for( const auto & as : spec.a_sets ) {
			auto raw = zn_with_a( n, as );
			b.offer( raw, "Zn-with-A", "n=" + std::to_string( n ) + " A=" + set_label( as ) );
		}
	}
	for( int n = spec.total_min; n <= spec.total_max; ++n ) {
		b.offer( total_hyperop( n ), "total-hyperop", "n=" + std::to_string( n ) );
	}
	for( const auto & raw : spec.extra ) {
		b.offer( raw, "extra", raw.name );
	}
	if( spec.depth < 1 ) {
		return std::move( b.members() );
	}
	const std::vector< CorpusMember > base = b.members();
	if( spec.quotients ) {
		for( const auto & m : base ) {
			for( const auto j : hyperideal_members( m.ring, std::max( kDefaultEnumerationCap, m.ring.size() ) ) ) {
				if( j == ElementSubset::singleton( 0 ) || j == m.ring.carrier() ) {
					continue;
				}
				++b.log().candidates;
				try {
					b.add( quotient( m.ring, j ).ring, "quotient", m.ring.name() + " by " + j.to_string() );
				} catch( const HyperError & e ) {
					++b.log().rejected;
					b.log().messages.push_back( "rejected " + m.ring.name() + "/" + j.to_string() + ": " + e.what() );
				}
			}
		}
	}
	if( spec.products ) {
		for( std::size_t i = 0; i < base.size(); ++i ) {
			for( std::size_t k = i; k < base.size(); ++k ) {
				if( base[ i ].ring.size() * base[ k ].ring.size() > spec.product_cap ) {
					continue;
				}
				++b.log().candidates;
				try {
					b.add( direct_product( base[ i ].ring, base[ k ].ring ), "product", base[ i ].ring.name() + " x " + base[ k ].ring.name() );
				} catch( const HyperError & e ) {
					++b.log().rejected;
					b.log().messages.push_back( "rejected product " + base[ i ].ring.name() + " x " + base[ k ].ring.name() + ": " + e.what() );
				}
			}
		}
	}
	if( spec.matrices ) {
		for( const auto & m : base ) {
			const long long s = m.ring.size();
			if( s * s * s * s > spec.matrix_cap || !m.ring.scalar_identity() ) {
				continue;
			}
			++b.log().candidates;
			try {
				b.add( matrix_hyperring( m.ring, 2, spec.matrix_cap ), "matrix", "M2 over " + m.ring.name() );
			} catch( const HyperError & e ) {
				++b.log().rejected;
				b.log().messages.push_back( "rejected M2(" + m.ring.name() + "): " + e.what() );
			}
		}
	}
	return std::move( b.members() );
}

std::string sha256_hex( const std::string & data ) {
	unsigned char digest[ EVP_MAX_MD_SIZE ];
	unsigned int len = 0;
	if( EVP_Digest( data.data(), data.size(), digest, &len, EVP_sha256(), nullptr ) != 1 ) {
		throw HyperError( "SHA-256 digest failed" );
	}
	std::ostringstream out;
	for( unsigned int k = 0; k < len; ++k ) {
		out << std::hex << std::setw( 2 ) << std::setfill( '0' ) << static_cast< int >( digest[ k ] );
	}
	return out.str();
}

std::string corpus_manifest( const std::vector< CorpusMember > & members ) {
	nlohmann::ordered_json doc = nlohmann::ordered_json::array();
	for( const auto & m : members ) {
		nlohmann::ordered_json rec;
		rec[ "name" ] = m.ring.name();
		rec[ "sha256" ] = sha256_hex( serialize_hyperring( m.ring ) );
		rec[ "generator" ] = m.generator;
		rec[ "params" ] = m.params;
		doc.push_back( rec );
	}
	return doc.dump( 2 ) + "\n";
}

std::vector< std::string > check_manifest( const std::vector< CorpusMember > & members, const std::string & manifest_text ) {
	std::vector< std::string > out;
	nlohmann::json doc;
	try {
		doc = nlohmann::json::parse( manifest_text );
	} catch( const nlohmann::json::parse_error & e ) {
		return { std::string( "manifest is not valid JSON: " ) + e.what() };
	}
	if( !doc.is_array() ) {
		return { "manifest is not an array" };
	}
	if( doc.size() != members.size() ) {
		out.push_back( "manifest lists " + std::to_string( doc.size() ) + " members, corpus has " + std::to_string( members.size() ) );
	}
	for( std::size_t k = 0; k < std::min( doc.size(), members.size() ); ++k ) {
		const auto & rec = doc[ k ];
		const auto & m = members[ k ];
		const auto name = rec.value( "name", std::string() );
		const auto hash = rec.value( "sha256", std::string() );
		if( name != m.ring.name() ) {
			out.push_back( "member " + std::to_string( k ) + ": manifest name " + name + ", corpus name " + m.ring.name() );
		} else if( hash != sha256_hex( serialize_hyperring( m.ring ) ) ) {
			out.push_back( "member " + name + ": content hash differs" );
		}
	}
	return out;
}

} // namespace hyperwb
