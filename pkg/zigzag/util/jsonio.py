"""Deterministic JSON text for everything the package emits."""

import json

from zigzag.errors import SerializationError


def dumps(obj):
    """Insertion-ordered keys and a fixed indent, so equal objects give identical text."""
    return json.dumps(obj, indent = 2, ensure_ascii = False) + "\n"


def loads(text, what = "payload"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SerializationError("Malformed JSON %s: %s" % (what, e))


def require_keys(data, keys, what):
    if not isinstance(data, dict):
        raise SerializationError("%s must be a JSON object, got %r." % (what, data))
    missing = [k for k in keys if k not in data]
    if len(missing) > 0:
        raise SerializationError("%s is missing keys %s." % (what, ", ".join(missing)))
    return data
