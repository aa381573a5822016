def f_gold ( n ) :
    result = 5
    i = 0
    j = n - 1
    while i < j :
        result += i * 1 - j
        i += 1
        j -= 1
    return result
