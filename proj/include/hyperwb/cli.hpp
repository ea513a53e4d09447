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

/**
 * @file
 *
 * The hyperwb command line.
 *
 *   validate <file> [--noncommutative]
 *   classify <file> [--ideal 0,2 ...] [--prime strict]
 *   ideals <file>
 *   theorems list
 *   theorems run [--corpus spec] [--ring file ...] [--only T18,T20]
 *                [--reading regular=vnr,...] [--json out] [--fail-fast] [--timing]
 *   generate <spec> --out dir
 *   construct quotient <file> --ideal 0,2
 *   construct product <file> <file>
 *   construct matrix <file> [--n 2]
 *   construct gamma-star <file> [--reading distinct-summands]
 *
 * Exit status: 0 on success, 1 when a theorem run finds a counterexample
 * under the counted readings, 2 on usage, input or validation errors.
 */

#ifndef HYPERWB_CLI_HPP
#define HYPERWB_CLI_HPP

#include <iosfwd>

namespace hyperwb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitError = 2;

int cli_main( int argc, const char * const * argv, std::ostream & out, std::ostream & err );

} // namespace hyperwb

#endif // HYPERWB_CLI_HPP
