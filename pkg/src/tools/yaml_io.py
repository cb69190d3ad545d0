#
# This file is part of the PyQutrit package,
# parts of the code is based on ruamel.yaml package.
#
# Copyright (c) 2023-2024 Sylvain Martin
# Copyright (c) 2014-2023 Anthon van der Neut, Ruamel bvba
#
"""
YAML documents of the package: tableaus, normal forms and relation databases.
"""
from __future__ import annotations

import collections.abc
import logging
import os
from typing import Any

from ruamel.yaml import YAML, StringIO
from ruamel.yaml.comments import CommentedMap, CommentedSeq

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


class StringDumpYaml(YAML):
    """
    YAML emitter returning the document as a string when no stream is given.
    Sequences of scalars (exponent vectors, wire lists) are written in flow
    style, everything else in block style.
    """

    def __init__(self, **kwarg):
        super().__init__(**kwarg)
        self.width = 4096
        self.default_flow_style = False

    def dump(self, data, stream=None, **kw):
        as_string = stream is None
        if as_string:
            stream = StringIO()
        YAML.dump(self, self._styled(data), stream, **kw)
        if as_string:
            return stream.getvalue()

    @staticmethod
    def _styled(obj: Any) -> Any:
        """ copy of ``obj`` with flow style on the innermost sequences """
        _st = StringDumpYaml._styled

        if isinstance(obj, collections.abc.Mapping):
            styled = CommentedMap()
            for key, value in obj.items():
                styled[key] = _st(value)
            return styled

        if isinstance(obj, collections.abc.Sequence) and not isinstance(obj, str):
            items = [_st(sub_obj) for sub_obj in obj]
            styled = CommentedSeq(items)
            if not any(isinstance(sub_obj, collections.abc.Mapping) for sub_obj in obj):
                styled.fa.set_flow_style()  # fa -> format attribute
            return styled

        return obj


def save_document(data: Any, filepath: str) -> None:
    """
    write ``data`` as a YAML document

    :param data: nested dicts and lists of scalars
    :param filepath: destination, parent directories are created
    """
    folder = os.path.dirname(filepath)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(filepath, "w", encoding="utf-8") as f:
        StringDumpYaml().dump(data, f)
    log.info("wrote %s" % filepath)


def load_document(filepath: str) -> Any:
    """
    read a YAML document written by :func:`save_document`

    :raise ValueError: when the file is not valid YAML
    """
    with open(filepath, encoding="utf-8") as f:
        text = f.read()
    try:
        return StringDumpYaml().load(text)
    except Exception as e:  # ruamel raises several unrelated parser exceptions
        raise ValueError("%s is not a YAML document: %s" % (filepath, e)) from e
