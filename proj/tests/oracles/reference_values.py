# Copyright 2026 The erconn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Offline arbitrary-precision reference values frozen into the unit tests.
# Run: python3 tests/oracles/reference_values.py
import mpmath as mp

mp.mp.dps = 60

# log Poisson pmf at k = lambda = 100.
k, lam = 100, mp.mpf(100)
print("log_poisson_pmf(100,100) =", mp.nstr(k * mp.log(lam) - lam - mp.loggamma(k + 1), 25))

# b_n = 1 - (1 - c/n)^n at n = 1e6, c = 1e-6.
n, c = mp.mpf(10) ** 6, mp.mpf(10) ** -6
print("stable_bn(1e6,1e-6) =", mp.nstr(1 - (1 - c / n) ** n, 25))

# Lambert-route meander probability at gamma = 1.05 and 1.1.
for g in (mp.mpf("1.05"), mp.mpf("1.1"), mp.mpf(2)):
    print("meander(%s) =" % g, mp.nstr(1 + mp.lambertw(-g * mp.exp(-g)) / g, 25))
