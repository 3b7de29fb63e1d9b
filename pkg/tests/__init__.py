"""Test suite for Cloud Agent OS"""
