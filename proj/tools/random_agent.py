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
"""Reference external agent: speaks the newline-delimited JSON protocol on
stdio and answers every request with a uniform random base action and a zero
prediction. Useful as a template for plugging real agents into `run
--agent exec:...`.

Only the standard library is used, so `exec:python3 tools/random_agent.py`
works anywhere the harness does.
"""

import base64
import json
import random
import struct
import sys


def tensor(values):
    data = struct.pack("<%df" % len(values), *values)
    return {"shape": [len(values)], "data": base64.b64encode(data).decode("ascii")}


def sample_unit_ball(rng, dim):
    while True:
        v = [rng.uniform(-1.0, 1.0) for _ in range(dim)]
        if sum(x * x for x in v) <= 1.0:
            return v


def act(seq, rng, base_dim, pred_size):
    return {
        "type": "act",
        "seq": seq,
        "base": tensor(sample_unit_ball(rng, base_dim)),
        "prediction": tensor([0.0] * pred_size),
    }


def ack(seq):
    return {"type": "ack", "seq": seq}


def main():
    rng = random.Random(0)
    base_dim = 0
    pred_size = 0
    for line in sys.stdin:
        if not line.strip():
            continue
        msg = json.loads(line)
        kind = msg["type"]
        seq = msg["seq"]
        if kind == "hello":
            base_dim = msg["base_action_dim"]
            pred_size = msg["prediction"]["size"]
            reply = ack(seq)
        elif kind == "reset":
            rng = random.Random(msg["seed"])
            reply = act(seq, rng, base_dim, pred_size)
        elif kind == "step":
            if msg["terminated"] or msg["truncated"]:
                reply = ack(seq)
            else:
                reply = act(seq, rng, base_dim, pred_size)
        elif kind == "close":
            print(json.dumps(ack(seq)), flush=True)
            return
        else:
            raise SystemExit("unknown frame type: %r" % kind)
        print(json.dumps(reply), flush=True)


if __name__ == "__main__":
    main()
