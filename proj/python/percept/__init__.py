# Copyright 2026 The Percept Authors
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
"""Active-perception benchmark suite.

Environments pair a movable sensor with a per-step prediction task; the
prediction is scored every step but never influences the hidden state. See
``environment_ids()`` for the catalogue and ``Env`` for the step API.
"""

from percept._percept import (
    Env,
    Error,
    builtin_agent_names,
    constants,
    environment_ids,
    replay,
    run,
)

__all__ = [
    "Env",
    "Error",
    "builtin_agent_names",
    "constants",
    "environment_ids",
    "replay",
    "run",
]
