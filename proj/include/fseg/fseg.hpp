#pragma once

#include "automata.hpp"
#include "chainprod.hpp"
#include "envelope.hpp"
#include "error.hpp"
#include "ferrers.hpp"
#include "io.hpp"
#include "main_example.hpp"
#include "metric.hpp"
#include "minmax.hpp"
#include "segments.hpp"
#include "verify.hpp"
#include "words.hpp"
