"""JSON schemas for ``footrule --json`` output, one per subcommand."""

_WORD = {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1}
_WORDS = {"type": "array", "items": _WORD}


def _obj(command: str, props: dict) -> dict:
    props = {"command": {"const": command}, **props}
    return {
        "type": "object",
        "properties": props,
        "required": sorted(props),
        "additionalProperties": False,
    }


_COUNTEREXAMPLE = {
    "type": "object",
    "properties": {
        "u": {"type": "string"},
        "in_segment": {"type": "boolean"},
        "image": {"type": "string"},
        "in_class": {"type": "boolean"},
    },
    "required": ["u", "in_segment", "image", "in_class"],
}

SCHEMAS = {
    "dist": _obj("dist", {"u": _WORD, "v": _WORD, "distance": {"type": "integer", "minimum": 0}}),
    "segment": {
        "oneOf": [
            _obj("segment", {"u": _WORD, "backend": {"enum": ["dp", "bt"]}, "count": {"type": "integer"}}),
            _obj("segment", {"u": _WORD, "count": {"type": "integer"}, "permutations": _WORDS}),
        ]
    },
    "sequence": _obj(
        "sequence",
        {
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "n": {"type": "integer"},
                        "w_n": _WORD,
                        "count": {"type": "integer"},
                        "genocchi": {"type": "string", "pattern": "^[GH]_[0-9]+$"},
                    },
                    "required": ["n", "w_n", "count", "genocchi"],
                    "additionalProperties": False,
                },
            }
        },
    ),
    "dumont": {
        "oneOf": [
            _obj("dumont", {"kind": {"enum": ["first", "second"]}, "size": {"type": "integer"},
                            "genocchi": {"type": "string"}, "count": {"type": "integer"}}),
            _obj("dumont", {"kind": {"enum": ["first", "second"]}, "size": {"type": "integer"},
                            "genocchi": {"type": "string"}, "count": {"type": "integer"},
                            "permutations": _WORDS}),
        ]
    },
    "map": _obj("map", {"u": _WORD, "map": {"enum": ["g", "h"]}, "image": _WORD}),
    "verify": _obj(
        "verify",
        {
            "parity": {"enum": ["odd", "even"]},
            "m": {"type": "integer", "minimum": 0},
            "n": {"type": "integer", "minimum": 1},
            "checked": {"type": "integer"},
            "segment_size": {"type": "integer"},
            "class_size": {"type": "integer"},
            "image_size": {"type": "integer"},
            "equivalence_holds": {"type": "boolean"},
            "injective": {"type": "boolean"},
            "image_equals_class": {"type": "boolean"},
            "counterexamples": {"type": "array", "items": _COUNTEREXAMPLE, "maxItems": 10},
            "passed": {"type": "boolean"},
        },
    ),
    "search": _obj(
        "search",
        {
            "n": {"type": "integer", "minimum": 1},
            "max_cardinality": {"type": "integer", "minimum": 1},
            "argmax": _WORDS,
            "wn_is_argmax": {"type": "boolean"},
        },
    ),
}
