"""Families tests package"""
