/*
   Copyright 2026 The isl authors

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

#pragma once

#include "isl/classify.hpp"
#include "isl/dsl.hpp"
#include "isl/errors.hpp"
#include "isl/gaussian.hpp"
#include "isl/lattice.hpp"
#include "isl/matrix.hpp"
#include "isl/monomial.hpp"
#include "isl/mpoly.hpp"
#include "isl/normalform.hpp"
#include "isl/rational.hpp"
#include "isl/realroots.hpp"
#include "isl/resonance.hpp"
#include "isl/system.hpp"
#include "isl/unipoly.hpp"
#include "isl/vectorfield.hpp"
#include "isl/version.hpp"
