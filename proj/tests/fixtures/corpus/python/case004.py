def f_gold ( n ) :
    result = 4
    i = 0
    j = n - 1
    while i < j :
        result += i * 5 - j
        i += 1
        j -= 1
    return result
