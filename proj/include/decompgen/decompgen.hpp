/*
   Copyright 2026 The decompgen Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DECOMPGEN_DECOMPGEN_HPP
#define DECOMPGEN_DECOMPGEN_HPP

#include "algebra.hpp"
#include "brauer_nesbitt.hpp"
#include "corpus.hpp"
#include "decomposition.hpp"
#include "factor.hpp"
#include "gcd_free.hpp"
#include "hermite.hpp"
#include "matrix.hpp"
#include "modules.hpp"
#include "prime.hpp"
#include "ring.hpp"
#include "sampling.hpp"
#include "strata.hpp"

#endif  // DECOMPGEN_DECOMPGEN_HPP
