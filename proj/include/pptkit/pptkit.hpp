#pragma once

#include "pptkit/analysis.hpp"
#include "pptkit/barning.hpp"
#include "pptkit/bigint.hpp"
#include "pptkit/classify.hpp"
#include "pptkit/coding.hpp"
#include "pptkit/errors.hpp"
#include "pptkit/st_enum.hpp"
#include "pptkit/triple.hpp"
