"""Transforms tests package"""
