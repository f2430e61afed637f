#!python
# coding: utf-8
