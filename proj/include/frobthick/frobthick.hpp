/*
 * Copyright 2026 The frobthick Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FROBTHICK_FROBTHICK_HPP
#define FROBTHICK_FROBTHICK_HPP

#include "analyzer.hpp"
#include "errors.hpp"
#include "fp_matrix.hpp"
#include "graded_ideal.hpp"
#include "local_cohomology.hpp"
#include "monomial_ideal.hpp"
#include "parser.hpp"
#include "polynomial.hpp"
#include "prime_field.hpp"
#include "verify.hpp"

#endif
