#pragma once

#include "hfold/bounds.hpp"
#include "hfold/bruteforce.hpp"
#include "hfold/errors.hpp"
#include "hfold/families.hpp"
#include "hfold/int_set.hpp"
#include "hfold/inverse.hpp"
#include "hfold/record.hpp"
#include "hfold/report.hpp"
#include "hfold/sumset.hpp"
#include "hfold/verify.hpp"
