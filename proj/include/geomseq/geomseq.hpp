/*
   Copyright 2026 The geomseq authors

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

#ifndef GEOMSEQ_GEOMSEQ_HPP
#define GEOMSEQ_GEOMSEQ_HPP

#include "geomseq/common.hpp"
#include "geomseq/bitvec.hpp"
#include "geomseq/field.hpp"
#include "geomseq/cyclotomy.hpp"
#include "geomseq/poly.hpp"
#include "geomseq/sequence.hpp"
#include "geomseq/lincomp.hpp"
#include "geomseq/correlate.hpp"
#include "geomseq/theorems.hpp"
#include "geomseq/report.hpp"

#endif // GEOMSEQ_GEOMSEQ_HPP
