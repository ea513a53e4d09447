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

#include "hyperwb/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperwb/classify.hpp"
#include "hyperwb/construct.hpp"
#include "hyperwb/corpus.hpp"
#include "hyperwb/io.hpp"
#include "hyperwb/theorems.hpp"

namespace hyperwb {

namespace {

using json = nlohmann::ordered_json;

json js( ElementSubset s ) {
	json a = json::array();
	s.for_each( [ & ]( Element x ) { a.push_back( x ); } );
	return a;
}

/// "0,2", "{0,2}" or "0 2".
ElementSubset parse_subset( const std::string & text, int size ) {
	ElementSubset out;
	std::string cleaned;
	for( char c : text ) {
		cleaned += ( c == '{' || c == '}' || c == ',' ) ? ' ' : c;
	}
	std::istringstream in( cleaned );
	std::string tok;
	while( in >> tok ) {
		int x = -1;
		try {
			std::size_t used = 0;
			x = std::stoi( tok, &used );
			if( used != tok.size() ) {
				x = -1;
			}
		} catch( const std::exception & ) {
		}
		if( x < 0 || x >= size ) {
			throw FormatError( "subset '" + text + "': element '" + tok + "' out of range 0.." + std::to_string( size - 1 ) );
		}
		out.insert( x );
	}
	return out;
}

std::vector< std::string > split_ids( const std::string & text ) {
	std::vector< std::string > out;
	std::istringstream in( text );
	std::string id;
	while( std::getline( in, id, ',' ) ) {
		if( !id.empty() ) {
			out.push_back( id );
		}
	}
	return out;
}

std::string file_stem( const std::string & name ) {
	std::string out;
	for( char c : name ) {
		const bool keep = std::isalnum( static_cast< unsigned char >( c ) ) || c == '-';
		if( keep ) {
			out += c;
		} else if( !out.empty() && out.back() != '_' ) {
			out += '_';
		}
	}
	while( !out.empty() && out.back() == '_' ) {
		out.pop_back();
	}
	return out;
}

void emit( const std::string & text, const std::string & path, std::ostream & out ) {
	if( path.empty() || path == "-" ) {
		out << text;
	} else {
		write_file( path, text );
	}
}

json ring_summary( const RingContext & ctx ) {
	const auto & r = ctx.ring();
	json o;
	o[ "name" ] = r.name();
	o[ "size" ] = r.size();
	o[ "commutative" ] = r.commutative();
	o[ "ordinary" ] = r.is_ordinary();
	o[ "identities" ] = js( r.identities() );
	if( const auto s = r.scalar_identity() ) {
		o[ "scalar_identity" ] = *s;
	} else {
		o[ "scalar_identity" ] = nullptr;
	}
	const auto & f = ctx.flags();
	o[ "integral_hyperdomain" ] = f.integral_hyperdomain;
	o[ "reduced" ] = f.reduced;
	o[ "regular" ] = f.regular_ring;
	o[ "invertible" ] = f.invertible_ring;
	o[ "all_hyperideals_C" ] = ctx.all_ideals_C();
	o[ "nil_radical" ] = js( ctx.nil_radical() );
	return o;
}

json classification( const RingContext & ctx, ElementSubset i, PrimeMode mode ) {
	json o;
	o[ "ideal" ] = js( i );
	if( !ctx.is_ideal( i ) ) {
		o[ "hyperideal" ] = false;
		return o;
	}
	const auto f = classify_ideal( ctx, i, mode );
	o[ "hyperideal" ] = true;
	o[ "proper" ] = f.proper;
	o[ "c_ideal" ] = f.c_ideal;
	o[ "prime" ] = f.prime;
	o[ "primary" ] = f.primary;
	o[ "maximal" ] = f.maximal;
	o[ "minimal_nonzero" ] = f.minimal_nonzero;
	o[ "minimal_prime" ] = f.minimal_prime;
	o[ "essential" ] = f.essential;
	o[ "r_ideal" ] = f.r_ideal;
	o[ "n_ideal" ] = f.n_ideal;
	o[ "radical" ] = js( ctx.radical( i ) );
	if( !f.witnesses.empty() ) {
		json w = json::object();
		for( const auto & [ k, v ] : f.witnesses ) {
			w[ k ] = v;
		}
		o[ "witnesses" ] = w;
	}
	return o;
}

struct Args {
	std::string file;
	std::vector< std::string > files;
	bool noncommutative = false;
	std::vector< std::string > ideals;
	std::string prime = "relaxed";
	std::string corpus = "default";
	std::vector< std::string > rings;
	std::string only;
	std::string reading;
	std::string json_out;
	bool fail_fast = false;
	bool timing = false;
	int cap = kDefaultEnumerationCap;
	std::string spec;
	std::string out_dir;
	std::string out;
	std::string ideal;
	int n = 2;
	std::string gamma = "free-sums";
};

HyperRing load( const std::string & path, bool noncommutative = false ) {
	return load_hyperring( path, { .require_commutative = !noncommutative } );
}

int run_validate( const Args & a, std::ostream & out ) {
	const auto r = load( a.file, a.noncommutative );
	const RingContext ctx( r, { std::max( a.cap, r.size() ) } );
	out << ring_summary( ctx ).dump( 2 ) << "\n";
	return kExitOk;
}

int run_classify( const Args & a, std::ostream & out ) {
	const auto r = load( a.file );
	const RingContext ctx( r, { std::max( a.cap, r.size() ) } );
	const auto mode = a.prime == "strict" ? PrimeMode::strict : PrimeMode::relaxed;
	json doc;
	doc[ "ring" ] = ring_summary( ctx );
	json list = json::array();
	if( a.ideals.empty() ) {
		for( const auto i : ctx.ideals() ) {
			list.push_back( classification( ctx, i, mode ) );
		}
	} else {
		for( const auto & text : a.ideals ) {
			list.push_back( classification( ctx, parse_subset( text, r.size() ), mode ) );
		}
	}
	doc[ "ideals" ] = list;
	out << doc.dump( 2 ) << "\n";
	return kExitOk;
}

int run_ideals( const Args & a, std::ostream & out ) {
	const auto r = load( a.file );
	for( const auto & p : enumerate_hyperideals( r, std::max( a.cap, r.size() ) ) ) {
		out << p.members.to_string() << ( p.is_C ? "  C" : "" ) << "\n";
	}
	return kExitOk;
}

int run_list( std::ostream & out ) {
	for( const auto & e : registry() ) {
		out << std::left << std::setw( 6 ) << e.id << e.name << "\n      " << e.statement << "\n";
		if( !e.axes.empty() ) {
			out << "      axes:";
			for( const auto ax : e.axes ) {
				out << " " << axis_name( ax );
			}
			out << "\n";
		}
	}
	return kExitOk;
}

int run_theorems( const Args & a, std::ostream & out ) {
	std::vector< HyperRing > corpus;
	if( a.rings.empty() ) {
		for( auto & m : generate_corpus( parse_corpus_spec( a.corpus ) ) ) {
			corpus.push_back( std::move( m.ring ) );
		}
	} else {
		for( const auto & path : a.rings ) {
			corpus.push_back( load( path, true ) );
		}
	}
	HarnessOptions opt;
	opt.enumeration_cap = a.cap;
	opt.fail_fast = a.fail_fast;
	opt.timing = a.timing;
	std::optional< Readings > forced;
	if( !a.reading.empty() ) {
		forced = parse_readings( a.reading );
	}
	const auto rep = run_suite( corpus, split_ids( a.only ), opt, forced ? &*forced : nullptr );
	if( !a.json_out.empty() ) {
		emit( rep.to_json(), a.json_out, out );
	}
	if( a.json_out != "-" ) {
		out << rep.to_table();
	}
	return rep.ok() ? kExitOk : kExitCounterexample;
}

int run_generate( const Args & a, std::ostream & out, std::ostream & err ) {
	CorpusLog log;
	const auto members = generate_corpus( parse_corpus_spec( a.spec ), &log );
	std::filesystem::create_directories( a.out_dir );
	for( std::size_t k = 0; k < members.size(); ++k ) {
		std::ostringstream name;
		name << std::setw( 3 ) << std::setfill( '0' ) << k << "_" << file_stem( members[ k ].ring.name() ) << ".json";
		save_hyperring( members[ k ].ring, ( std::filesystem::path( a.out_dir ) / name.str() ).string() );
	}
	write_file( ( std::filesystem::path( a.out_dir ) / "manifest.json" ).string(), corpus_manifest( members ) );
	for( const auto & m : log.messages ) {
		err << m << "\n";
	}
	out << members.size() << " members, " << log.candidates << " candidates, " << log.rejected << " rejected, " << log.duplicates << " duplicates\n";
	return kExitOk;
}

int run_construct( const std::string & kind, const Args & a, std::ostream & out ) {
	HyperRing result = [ & ] {
		if( kind == "quotient" ) {
			const auto r = load( a.files.at( 0 ) );
			return quotient( r, parse_subset( a.ideal, r.size() ) ).ring;
		}
		if( kind == "product" ) {
			if( a.files.size() != 2 ) {
				throw FormatError( "construct product takes two files" );
			}
			return direct_product( load( a.files[ 0 ], true ), load( a.files[ 1 ], true ) );
		}
		if( kind == "matrix" ) {
			return matrix_hyperring( load( a.files.at( 0 ) ), a.n, kMaxCarrier );
		}
		const auto reading = a.gamma == "distinct-summands" ? GammaReading::distinct_summands : GammaReading::free_sums;
		return fundamental_ring( load( a.files.at( 0 ), true ), kMaxCarrier, reading ).ring;
	}();
	emit( serialize_hyperring( result ), a.out, out );
	return kExitOk;
}

} // namespace

int cli_main( int argc, const char * const * argv, std::ostream & out, std::ostream & err ) {
	CLI::App app{ "Workbench for finite commutative multiplicative hyperrings", "hyperwb" };
	app.require_subcommand( 1 );
	Args a;

	auto * validate = app.add_subcommand( "validate", "Check the hyperring axioms of a table file" );
	validate->add_option( "file", a.file, "hyperring JSON file" )->required();
	validate->add_flag( "--noncommutative", a.noncommutative, "accept a noncommutative hyperproduct" );

	auto * classify = app.add_subcommand( "classify", "Classify hyperideals" );
	classify->add_option( "file", a.file, "hyperring JSON file" )->required();
	classify->add_option( "--ideal", a.ideals, "subset such as 0,2; default every hyperideal" );
	classify->add_option( "--prime", a.prime, "relaxed or strict" )->check( CLI::IsMember( { "relaxed", "strict" } ) );

	auto * ideals = app.add_subcommand( "ideals", "List hyperideals in canonical order" );
	ideals->add_option( "file", a.file, "hyperring JSON file" )->required();

	auto * theorems = app.add_subcommand( "theorems", "Proposition registry" );
	theorems->require_subcommand( 1 );
	auto * list = theorems->add_subcommand( "list", "Print the registry" );
	auto * run = theorems->add_subcommand( "run", "Run the registry over a corpus" );
	run->add_option( "--corpus", a.corpus, "corpus spec" );
	run->add_option( "--ring", a.rings, "hyperring JSON files instead of a corpus" );
	run->add_option( "--only", a.only, "comma-separated ids" );
	run->add_option( "--reading", a.reading, "force one reading, e.g. regular=vnr,prime=strict" );
	run->add_option( "--json", a.json_out, "write the JSON report here, - for stdout" );
	run->add_flag( "--fail-fast", a.fail_fast, "stop at the first counted counterexample" );
	run->add_flag( "--timing", a.timing, "record wall time per verdict" );

	auto * generate = app.add_subcommand( "generate", "Write a corpus and its manifest" );
	generate->add_option( "spec", a.spec, "corpus spec or default" )->required();
	generate->add_option( "--out", a.out_dir, "output directory" )->required();

	auto * construct = app.add_subcommand( "construct", "Derived hyperrings" );
	construct->require_subcommand( 1 );
	auto * cq = construct->add_subcommand( "quotient", "R/J" );
	cq->add_option( "file", a.files, "hyperring JSON file" )->required()->expected( 1 );
	cq->add_option( "--ideal", a.ideal, "the hyperideal J" )->required();
	auto * cp = construct->add_subcommand( "product", "R1 x R2" );
	cp->add_option( "files", a.files, "two hyperring JSON files" )->required()->expected( 2 );
	auto * cm = construct->add_subcommand( "matrix", "Mn(R)" );
	cm->add_option( "file", a.files, "hyperring JSON file" )->required()->expected( 1 );
	cm->add_option( "--n", a.n, "1 or 2" )->check( CLI::Range( 1, 2 ) );
	auto * cg = construct->add_subcommand( "gamma-star", "The fundamental ring R/gamma*" );
	cg->add_option( "file", a.files, "hyperring JSON file" )->required()->expected( 1 );
	cg->add_option( "--reading", a.gamma, "free-sums or distinct-summands" )->check( CLI::IsMember( { "free-sums", "distinct-summands" } ) );
	for( auto * c : { cq, cp, cm, cg } ) {
		c->add_option( "--out", a.out, "output file, default stdout" );
	}
	for( auto * c : { validate, classify, ideals, static_cast< CLI::App * >( run ) } ) {
		c->add_option( "--cap", a.cap, "hyperideal enumeration cap" );
	}

	try {
		app.parse( argc, argv );
	} catch( const CLI::CallForHelp & e ) {
		out << app.help();
		return kExitOk;
	} catch( const CLI::CallForAllHelp & e ) {
		out << app.help( "", CLI::AppFormatMode::All );
		return kExitOk;
	} catch( const CLI::ParseError & e ) {
		err << "hyperwb: " << e.what() << "\n" << app.help();
		return kExitError;
	}

	try {
		if( *validate ) {
			return run_validate( a, out );
		}
		if( *classify ) {
			return run_classify( a, out );
		}
		if( *ideals ) {
			return run_ideals( a, out );
		}
		if( *list ) {
			return run_list( out );
		}
		if( *run ) {
			return run_theorems( a, out );
		}
		if( *generate ) {
			return run_generate( a, out, err );
		}
		for( auto * c : { cq, cp, cm, cg } ) {
			if( *c ) {
				return run_construct( c->get_name(), a, out );
			}
		}
	} catch( const std::exception & e ) {
		err << "hyperwb: " << e.what() << "\n";
		return kExitError;
	}
	return kExitError;
}

} // namespace hyperwb
