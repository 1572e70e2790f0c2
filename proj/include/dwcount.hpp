#pragma once

#include "dwcount/bigint.hpp"
#include "dwcount/counting.hpp"
#include "dwcount/cyclotomic.hpp"
#include "dwcount/dw.hpp"
#include "dwcount/error.hpp"
#include "dwcount/oracle.hpp"
#include "dwcount/parse.hpp"
#include "dwcount/seifert.hpp"
